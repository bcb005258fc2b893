#pragma once

#include "tangles/system.hpp"
#include "tangles/universe.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tangles {

// Checked universe-level operations. Unknown elements raise ErrorKind::input.
Sep invert(const Universe& u, Sep s);
bool leq(const Universe& u, Sep r, Sep s);
Sep meet(const Universe& u, Sep r, Sep s);
Sep join(const Universe& u, Sep r, Sep s);

/// Canonical key of the unoriented separation {s, s*}: its smaller code.
Sep unoriented_key(const Universe& u, Sep s);

/// The (at most four) corner separations of r and s as unoriented keys,
/// sorted. Each argument may be given in either orientation.
std::vector<Sep> corner_separations(const Universe& u, Sep r, Sep s);

bool nested(const Universe& u, Sep r, Sep s);

bool nested(const SeparationSystem& S, Id r, Id s);
/// Whether r is nested with every member of `set` (ids of S).
bool nested_with_all(const SeparationSystem& S, Id r, const IdSet& set);
bool is_nested_set(const SeparationSystem& S, const IdSet& set);

struct SepFlags {
  bool degenerate = false;
  bool small = false;
  bool cosmall = false;
  bool trivial = false;
  std::optional<Id> trivial_witness;
};

SepFlags classify(const SeparationSystem& S, Id s);

using IdPair = std::pair<Id, Id>;
using SepPair = std::pair<Sep, Sep>;

/// First oriented pair (i <= j, in id order) with neither i∨j nor i∧j in S.
std::optional<IdPair> find_submodularity_violation(const SeparationSystem& S);
inline bool is_submodular(const SeparationSystem& S) { return !find_submodularity_violation(S); }

/// First pair of S violating |r∨s| + |r∧s| <= |r| + |s| (meets and joins
/// are evaluated in the universe). Over the full universe this is the
/// order-submodularity check of the universe itself.
std::optional<IdPair> find_order_submodularity_violation(const SeparationSystem& S);
/// Universe-level check over all elements. ErrorKind::unsupported without
/// an order function.
std::optional<SepPair> check_order_submodular(const Universe& u);

/// S_k := {s : |s| < k}. ErrorKind::unsupported without an order function.
SeparationSystem induced_Sk(const UniversePtr& u, std::int64_t k);

/// Members of S nested with every element of M (ids of S). Returns the
/// retained ids of S; use restrict_nested() for a standalone system.
IdSet nested_members(const SeparationSystem& S, const IdSet& M);
SeparationSystem restrict_nested(const SeparationSystem& S, const IdSet& M);

namespace reference {
// Serial versions of the parallel pair scans, kept for tests and bench/.
std::optional<IdPair> find_submodularity_violation(const SeparationSystem& S);
std::optional<IdPair> find_order_submodularity_violation(const SeparationSystem& S);
}  // namespace reference

}  // namespace tangles
