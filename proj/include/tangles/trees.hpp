#pragma once

#include "tangles/orient.hpp"
#include "tangles/system.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tangles {

/// A nested set is an IdSet of unoriented separations keyed by their
/// representative ids. Either orientation is accepted on input.
IdSet unoriented_set(const SeparationSystem& S, const IdSet& members);
/// Both orientations of every member.
IdSet oriented_set(const SeparationSystem& S, const IdSet& N);

/// Pairwise nested, no degenerate members and no member trivial in N⃗.
bool is_tree_set(const SeparationSystem& S, const IdSet& N);
/// Tree set without small orientations.
bool is_regular_tree_set(const SeparationSystem& S, const IdSet& N);

/// The splitting stars of N: maximal elements of each consistent
/// orientation of N, sorted and deduplicated.
std::vector<IdSet> nodes_of(const SeparationSystem& S, const IdSet& N, const EnumLimits& limits = {});

/// The node of N at which the consistent orientation O lives. Inconsistent
/// O is an input error; if N is not regular and O lives at several nodes,
/// a domain error.
IdSet lives_at(const SeparationSystem& S, const Orientation& O, const IdSet& N);

struct NodeClasses {
  std::vector<IdSet> essential;
  std::vector<IdSet> inessential;
};
NodeClasses essential_nodes(const SeparationSystem& S, const IdSet& N, const OrientationSet& set,
                            const EnumLimits& limits = {});

/// A tree with oriented edge labels. edges[k] = (from, to, α(from, to));
/// the reverse orientation carries the inverse label.
struct STree {
  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Id label = 0;
  };
  std::size_t vertices = 1;
  std::vector<Edge> edges;
};

/// σ_t = {α(t', t)} for every vertex t, as sets.
std::vector<IdSet> stars_of(const SeparationSystem& S, const STree& T);
/// Adjacency lists: (neighbour, α(t, neighbour)).
std::vector<std::vector<std::pair<std::size_t, Id>>> adjacency(const SeparationSystem& S, const STree& T);

/// Labels α(x, t) of the edges leaving the leaves, sorted and deduplicated.
IdSet leaf_separations(const SeparationSystem& S, const STree& T);
/// Number of leaf edges labelled `label`.
std::size_t leaf_count(const SeparationSystem& S, const STree& T, Id label);
/// Number of oriented edges labelled `label`.
std::size_t label_count(const SeparationSystem& S, const STree& T, Id label);

struct STreeReport {
  bool is_stree = false;
  std::optional<bool> over_F;
  bool irredundant = false;
  bool tight = false;
  bool order_preserving = false;
  std::string problem;  // first failure, human-readable
  bool ok() const { return is_stree && over_F.value_or(true) && irredundant && tight && order_preserving; }
};
STreeReport stree_validate(const SeparationSystem& S, const STree& T, const StarFamily* F = nullptr);

/// The S-tree of a regular tree set: one vertex per node (in nodes_of
/// order), one edge per member. Input error on non-regular N.
STree treeset_to_stree(const SeparationSystem& S, const IdSet& N, const EnumLimits& limits = {});
/// im(α) as a nested set; domain error on trivial or degenerate labels.
IdSet stree_to_treeset(const SeparationSystem& S, const STree& T);
/// im(α) without the trivial-label check.
IdSet stree_image(const SeparationSystem& S, const STree& T);

/// Deletes duplicate branches and short-circuits non-tight nodes until the
/// tree is irredundant and tight. Every member of `keep` must end up a leaf
/// separation labelling no other edge; otherwise a domain error.
STree irredundant_reduction(const SeparationSystem& S, const STree& T, const IdSet& keep = {});

/// Canonical vertex numbering (by star content, stable on ties) with
/// edges sorted; used for serialization and comparisons.
STree canonical_form(const SeparationSystem& S, const STree& T);

}  // namespace tangles
