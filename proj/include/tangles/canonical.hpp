#pragma once

#include "tangles/orient.hpp"
#include "tangles/refine.hpp"
#include "tangles/system.hpp"
#include "tangles/trees.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tangles {

/// Contained in exactly one orientation of the set.
bool exclusive(Id s, const OrientationSet& profiles);

/// Members of `domain` (ids) that lie in P, in no other profile of
/// `remaining`, and are maximal in P ∩ domain.
IdSet maximal_exclusive(const SeparationSystem& S, const Orientation& P, const OrientationSet& remaining,
                        const IdSet& domain);

struct ExclusiveRecord {
  std::size_t profile = 0;  // index into the input profile list
  IdSet m_set;
  Id s_p = 0;
  std::size_t round = 0;
};

struct Construction41 {
  IdSet N;
  std::vector<ExclusiveRecord> records;
  /// Per round: members of N so far and the number of surviving ids.
  std::vector<IdSet> rounds_N;
  std::vector<std::size_t> rounds_size;
};

/// The canonical nested set distinguishing the profiles, with the
/// closeness, home-node and inessential-node post-checks.
Construction41 construction_41(const SeparationSystem& S, const OrientationSet& profiles);

struct RefinedCanonical {
  IdSet Ntilde;
  OrientationSet tangles;
  Construction41 construction;
  RefinedTreeSet refined;
  std::size_t inessential_in_Ntilde = 0;
};

/// Construction 4.1 on all F-tangles, then refinement of its inessential
/// nodes. F must be friendly; closure under shifting is checked unless
/// `closure_known` says otherwise.
RefinedCanonical refined_canonical(const SeparationSystem& S, const StarFamily& F, const RefineOptions& options = {},
                                   std::optional<bool> closure_known = std::nullopt);

struct GoodRecord {
  std::size_t profile = 0;
  IdSet e_set;
  std::optional<Id> r_p;
};

/// E_P for P = profiles[index] among `current`, inside S_M. Every profile
/// index refers to `profiles`.
GoodRecord e_set(const SeparationSystem& S, const OrientationSet& profiles, std::size_t index,
                 const std::vector<std::size_t>& current, const IdSet& M);

struct GoodNestedSet {
  IdSet N;
  std::vector<std::vector<GoodRecord>> levels;
};

/// Nested, distinguishing and good for the profiles; lemma assertions live.
GoodNestedSet good_nested_set(const SeparationSystem& S, const OrientationSet& profiles);

/// First separation of S_M (by representative id) distinguishing P and Q well.
Id find_well_distinguisher(const SeparationSystem& S, const Orientation& P, const Orientation& Q, const IdSet& M);

/// A bijection between the oriented elements of two systems.
struct Isomorphism {
  const SeparationSystem* from = nullptr;
  const SeparationSystem* to = nullptr;
  std::vector<Id> map;

  /// Order-respecting in both directions and commuting with involutions.
  bool valid() const;
  /// Additionally r ∨ s ∈ S iff φ(r) ∨ φ(s) ∈ S'.
  bool lattice_compatible() const;

  Id operator()(Id x) const { return map[x]; }
  IdSet apply_unoriented(const IdSet& N) const;
  Orientation apply(const Orientation& O) const;
  OrientationSet apply(const OrientationSet& set) const;
};

using NestedBuilder = std::function<IdSet(const SeparationSystem&, const OrientationSet&)>;
IdSet build_construction_41(const SeparationSystem& S, const OrientationSet& profiles);
IdSet build_good_nested_set(const SeparationSystem& S, const OrientationSet& profiles);

/// φ(builder(S, P)) == builder(S', φ(P)). With `lattice_only`, φ must be
/// lattice-compatible (input error otherwise).
bool check_canonicity(const NestedBuilder& builder, const Isomorphism& phi, const OrientationSet& profiles,
                      bool lattice_only = false);

namespace reference {
// Serial versions; the per-profile loops of each round run in order.
Construction41 construction_41(const SeparationSystem& S, const OrientationSet& profiles);
GoodNestedSet good_nested_set(const SeparationSystem& S, const OrientationSet& profiles);
}  // namespace reference

}  // namespace tangles
