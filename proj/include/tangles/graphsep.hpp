#pragma once

#include "tangles/canonical.hpp"
#include "tangles/orient.hpp"
#include "tangles/system.hpp"
#include "tangles/universe.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tangles {

/// Simple loopless graph on at most 20 named vertices.
struct Graph {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

  static constexpr std::size_t max_vertices = 20;

  /// Validates and normalizes; ErrorKind::input on loops, repeated edges,
  /// unknown endpoints or too many vertices.
  static Graph make(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t size() const { return names.size(); }
  std::uint32_t full() const { return size() == 32 ? ~0U : ((1U << size()) - 1U); }
  std::vector<std::uint32_t> neighbours() const;
  /// Complete graph, cycle and path helpers with vertex names v0, v1, ...
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);
  /// Disjoint copies of `parts` glued at their first vertex.
  static Graph glued(const std::vector<Graph>& parts);
};

/// All separations (A, B) of a graph: A ∪ B = V, no edge between A∖B and
/// B∖A. Code = A | B << 32, meet (A∩C, B∪D), join (A∪C, B∩D), order |A∩B|.
class GraphUniverse final : public Universe {
 public:
  explicit GraphUniverse(Graph g);

  std::string_view kind() const override { return "graph"; }
  bool valid(Code c) const override;
  Code invert(Code c) const override { return (c >> 32) | (c << 32); }
  bool leq(Code a, Code b) const override;
  Code meet(Code a, Code b) const override;
  Code join(Code a, Code b) const override;
  bool has_order() const override { return true; }
  Order order(Code c) const override;
  /// Full enumeration is limited to 14 vertices (resource error beyond).
  std::vector<Code> elements() const override;
  std::vector<Code> elements_below(std::int64_t k) const override;
  std::string describe(Code c) const override;
  Code parse(std::string_view token) const override;

  const Graph& graph() const { return graph_; }
  static std::uint32_t side_a(Code c) { return static_cast<std::uint32_t>(c); }
  static std::uint32_t side_b(Code c) { return static_cast<std::uint32_t>(c >> 32); }
  static Code encode(std::uint32_t a, std::uint32_t b) { return Code{a} | (Code{b} << 32); }

  /// Separations with |A ∩ B| < bound, sorted.
  std::vector<Code> separations_below(std::size_t bound, bool parallel = true) const;

 private:

  Graph graph_;
  std::vector<std::uint32_t> adj_;
  std::uint32_t full_ = 0;
};

/// The graph universe behind S, or an input error.
const GraphUniverse& graph_universe_of(const SeparationSystem& S);

SeparationSystem build_Sk(const Graph& g, std::int64_t k);

/// Stars of at most three members whose first sides cover all vertices and
/// edges, plus the standard and regularity singletons.
StarFamily tk_star(const SeparationSystem& S);

OrientationSet graph_tangles(const Graph& g, std::int64_t k, const EnumLimits& limits = {});

struct Decomposition {
  std::vector<IdSet> nodes;
  std::vector<std::uint32_t> parts;  // vertex masks, one per node
  STree tree;
};
/// Parts ⋂ B over each node of a regular tree set N ⊆ S_k(G).
Decomposition decomposition_export(const SeparationSystem& S, const IdSet& N);
std::string describe_part(const Graph& g, std::uint32_t mask);

/// The isomorphism S → S' induced by a vertex bijection between the
/// underlying graphs. Input error if a separation is not mapped into S'.
Isomorphism vertex_isomorphism(const SeparationSystem& S, const SeparationSystem& S2,
                               const std::vector<std::size_t>& perm);

/// Automorphisms of g as vertex permutations, in lexicographic order, at
/// most `cap` of them.
std::vector<std::vector<std::size_t>> graph_automorphisms(const Graph& g, std::size_t cap = 100'000);

namespace reference {
// Serial versions of the parallel enumerations.
SeparationSystem build_Sk(const Graph& g, std::int64_t k);
StarFamily tk_star(const SeparationSystem& S);
}  // namespace reference

}  // namespace tangles
