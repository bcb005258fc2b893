#pragma once

#include "tangles/duality.hpp"
#include "tangles/orient.hpp"
#include "tangles/system.hpp"
#include "tangles/trees.hpp"

#include <optional>
#include <vector>

namespace tangles {

/// A separation paired with a profile it is closely related to.
struct CloseWitness {
  Id separation = 0;
  Orientation profile;
};

/// s ∉ P gives s itself; otherwise the first r ∈ P with s ∧ r ∉ S⃗.
std::optional<Id> closeness_violation(const SeparationSystem& S, Id s, const Orientation& P);
inline bool closely_related(const SeparationSystem& S, Id s, const Orientation& P) {
  return !closeness_violation(S, s, P);
}

/// Some P ≠ P' in the set with s closely related to P and s̄ to P'.
bool good(const SeparationSystem& S, Id s, const OrientationSet& profiles);
bool distinguishes_well(const SeparationSystem& S, Id s, const Orientation& P, const Orientation& Q);

/// s ∧ inf(M), folded in id order with each step asserted to lie in S⃗.
/// With `close_to`, the result is also checked to be closely related to it.
Id guarded_inf(const SeparationSystem& S, Id s, const std::vector<CloseWitness>& M,
               const Orientation* close_to = nullptr);

/// First orientation in the set to which s is closely related.
std::optional<std::size_t> find_close_profile(const SeparationSystem& S, Id s, const OrientationSet& set);

struct RefineOptions {
  EnumLimits limits;
  std::size_t max_tree_vertices = 200'000;
  /// F-tangles of S, if already known.
  const OrientationSet* tangles = nullptr;
};

/// An S-tree over F ∪ {{s̄} : s ∈ σ} in which every member of the
/// inessential star σ is a leaf separation. witnesses[i], when given,
/// pairs the inverse of the i-th member (in id order) with an F-tangle.
STree refine_star(const SeparationSystem& S, const IdSet& sigma, const StarFamily& F,
                  const std::vector<CloseWitness>& witnesses = {}, const RefineOptions& options = {});

struct RefinedTreeSet {
  IdSet N;
  std::vector<IdSet> inessential;  // inessential nodes of the input set
  std::vector<STree> trees;        // one per inessential node
  std::vector<IdSet> nodes;        // nodes of N
  std::vector<char> node_in_F;     // per node: star in F, possibly after dropping trivial members
  std::vector<char> node_padded;   // per node: only in F with trivial members added
  std::vector<char> node_home;     // per node: home to an F-tangle
};

/// Adds to N the images of refined trees for each inessential node and
/// verifies that every node of the result is in F or home to an F-tangle.
RefinedTreeSet refine_treeset(const SeparationSystem& S, const IdSet& N, const StarFamily& F,
                              const RefineOptions& options = {});

}  // namespace tangles
