#pragma once

#include "tangles/orient.hpp"
#include "tangles/system.hpp"
#include "tangles/trees.hpp"

#include <optional>
#include <tuple>

namespace tangles {

/// x ∈ S⃗ with x ≥ r or x̄ ≥ r.
bool in_shift_domain(const SeparationSystem& S, Id r, Id x);

/// First x ≥ r (x ≠ r̄) with s ∨ x ∉ S⃗, or s itself when s is not ≥ r.
/// r trivial or degenerate is an input error.
std::optional<Id> emulation_violation(const SeparationSystem& S, Id s, Id r);
inline bool emulates(const SeparationSystem& S, Id s, Id r) { return !emulation_violation(S, s, r); }

/// f↓ onto s with base r.
struct ShiftMap {
  Id r = 0;
  Id s = 0;
};
/// Checks that s emulates r; input error otherwise.
ShiftMap make_shift(const SeparationSystem& S, Id r, Id s);
/// x ∨ s for x ≥ r (x ≠ r̄), (x̄ ∨ s)* for x̄ ≥ r. Input error outside
/// the domain; integrity error if the image leaves S⃗.
Id shift_apply(const SeparationSystem& S, const ShiftMap& m, Id x);

/// Index of a star σ ∈ F (inside the domain, minus r̄, with a member ≥ r)
/// whose image is not in F. s must emulate r.
std::optional<std::size_t> emulation_violation_for_F(const SeparationSystem& S, Id s, Id r, const StarFamily& F);
inline bool emulates_for_F(const SeparationSystem& S, Id s, Id r, const StarFamily& F) {
  return !emulation_violation_for_F(S, s, r, F);
}

struct ShiftWitness {
  Id s = 0;
  Id r = 0;
  std::size_t star = 0;  // index into F
};
/// First (in r, then s order) emulating pair that fails for F.
std::optional<ShiftWitness> shifting_violation(const SeparationSystem& S, const StarFamily& F);
inline bool closed_under_shifting(const SeparationSystem& S, const StarFamily& F) {
  return !shifting_violation(S, F);
}

/// Shifts a tight irredundant tree onto s along the leaf
/// separation r. Result is an S-tree over F ∪ {{s̄}} (checked when F is given).
STree shift_stree(const SeparationSystem& S, const STree& T, Id r, Id s, const StarFamily* F = nullptr);

struct DualityOptions {
  /// Verify closure under shifting first (quadratic in |S|).
  bool check_closure = true;
  EnumLimits limits;
  std::size_t max_tree_vertices = 200'000;
};

struct DualityResult {
  std::optional<Orientation> tangle;
  std::optional<STree> tree;
  bool has_tangle() const { return tangle.has_value(); }
};

/// Either an F-tangle or an S-tree over F, each verified before return.
DualityResult duality_decide(const SeparationSystem& S, const StarFamily& F, const DualityOptions& options = {});

/// First pair s ≤ r with no t (s ≤ t ≤ r) such that t emulates s and t̄
/// emulates r̄.
std::optional<IdPair> separability_violation(const SeparationSystem& S);
inline bool check_separable(const SeparationSystem& S) { return !separability_violation(S); }

namespace reference {
std::optional<ShiftWitness> shifting_violation(const SeparationSystem& S, const StarFamily& F);
std::optional<IdPair> separability_violation(const SeparationSystem& S);
}  // namespace reference

}  // namespace tangles
