#include "tangles/graphsep.hpp"

#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>
#include <set>

namespace tangles {

Graph Graph::make(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  if (names.size() > max_vertices)
    fail(ErrorKind::input, "graphs are limited to " + std::to_string(max_vertices) + " vertices");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) fail(ErrorKind::input, "duplicate vertex names");
  Graph g;
  g.names = std::move(names);
  for (auto [u, v] : edges) {
    if (u >= g.names.size() || v >= g.names.size()) fail(ErrorKind::input, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::input, "loop at " + g.names[u]);
    if (u > v) std::swap(u, v);
    g.edges.push_back({u, v});
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
    fail(ErrorKind::input, "repeated edge");
  return g;
}

std::vector<std::uint32_t> Graph::neighbours() const {
  std::vector<std::uint32_t> adj(size(), 0);
  for (auto [u, v] : edges) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  return adj;
}

namespace {

std::vector<std::string> numbered(std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i + offset));
  return out;
}

}  // namespace

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({u, v});
  return make(numbered(n), e);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return make(numbered(n), e);
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return make(numbered(n), e);
}

Graph Graph::glued(const std::vector<Graph>& parts) {
  std::size_t total = 1;
  for (const auto& p : parts) {
    if (p.size() == 0) fail(ErrorKind::input, "cannot glue an empty graph");
    total += p.size() - 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t next = 1;
  for (const auto& p : parts) {
    auto index = [&](std::size_t v) { return v == 0 ? std::size_t{0} : next + v - 1; };
    for (auto [u, v] : p.edges) e.push_back({index(u), index(v)});
    next += p.size() - 1;
  }
  return make(numbered(total), e);
}

GraphUniverse::GraphUniverse(Graph g) : graph_(std::move(g)), adj_(graph_.neighbours()), full_(graph_.full()) {}

bool GraphUniverse::valid(Code c) const {
  std::uint32_t a = side_a(c), b = side_b(c);
  if ((a | b) != full_ || (a & ~full_) || (b & ~full_)) return false;
  std::uint32_t only_a = a & ~b, only_b = b & ~a;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    if (((only_a >> v) & 1U) && (adj_[v] & only_b)) return false;
  return true;
}

bool GraphUniverse::leq(Code x, Code y) const {
  return (side_a(x) & ~side_a(y)) == 0 && (side_b(y) & ~side_b(x)) == 0;
}

Code GraphUniverse::meet(Code x, Code y) const {
  return encode(side_a(x) & side_a(y), side_b(x) | side_b(y));
}

Code GraphUniverse::join(Code x, Code y) const {
  return encode(side_a(x) | side_a(y), side_b(x) & side_b(y));
}

Order GraphUniverse::order(Code c) const { return Order(std::popcount(side_a(c) & side_b(c))); }

std::vector<Code> GraphUniverse::separations_below(std::size_t bound, bool parallel) const {
  const std::size_t n = graph_.size();
  std::vector<std::uint32_t> separators;
  for (std::uint32_t x = 0; x <= full_; ++x) {
    if (static_cast<std::size_t>(std::popcount(x)) < bound) separators.push_back(x);
    if (x == full_) break;
  }
  std::vector<std::vector<Code>> found(separators.size());
  const auto count = static_cast<std::int64_t>(separators.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs()) if (parallel)
  for (std::int64_t t = 0; t < count; ++t) {
    const std::uint32_t x = separators[t];
    std::vector<std::uint32_t> comps;
    std::uint32_t left = full_ & ~x;
    while (left) {
      std::uint32_t comp = left & (~left + 1U), frontier = comp;
      while (frontier) {
        std::uint32_t grow = 0;
        for (std::size_t v = 0; v < n; ++v)
          if ((frontier >> v) & 1U) grow |= adj_[v];
        grow &= left & ~comp;
        comp |= grow;
        frontier = grow;
      }
      comps.push_back(comp);
      left &= ~comp;
    }
    const std::size_t c = comps.size();
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
      std::uint32_t a = x, b = x;
      for (std::size_t i = 0; i < c; ++i) ((pick >> i) & 1U ? a : b) |= comps[i];
      found[t].push_back(encode(a, b));
    }
  }
  std::vector<Code> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Code> GraphUniverse::elements() const {
  if (graph_.size() > 14) fail(ErrorKind::resource, "full separation enumeration is limited to 14 vertices");
  return separations_below(graph_.size() + 1);
}

std::vector<Code> GraphUniverse::elements_below(std::int64_t k) const {
  if (k <= 0) return {};
  return separations_below(static_cast<std::size_t>(k));
}

std::string describe_part(const Graph& g, std::uint32_t mask) {
  std::string out = "{";
  for (std::size_t v = 0; v < g.size(); ++v)
    if ((mask >> v) & 1U) {
      if (out.size() > 1) out += ',';
      out += g.names[v];
    }
  return out + "}";
}

std::string GraphUniverse::describe(Code c) const {
  return describe_part(graph_, side_a(c)) + "|" + describe_part(graph_, side_b(c));
}

Code GraphUniverse::parse(std::string_view token) const {
  auto bar = token.find('|');
  if (bar == std::string_view::npos) fail(ErrorKind::input, "graph separations are written A|B");
  auto mask = [&](std::string_view text) {
    std::uint32_t m = 0;
    for (const auto& name : split_name_list(text)) {
      auto it = std::find(graph_.names.begin(), graph_.names.end(), name);
      if (it == graph_.names.end()) fail(ErrorKind::input, "unknown vertex '" + name + "'");
      m |= 1U << static_cast<unsigned>(it - graph_.names.begin());
    }
    return m;
  };
  Code c = encode(mask(token.substr(0, bar)), mask(token.substr(bar + 1)));
  if (!valid(c)) fail(ErrorKind::input, "'" + std::string(token) + "' is not a separation of the graph");
  return c;
}

const GraphUniverse& graph_universe_of(const SeparationSystem& S) {
  const auto* g = dynamic_cast<const GraphUniverse*>(&S.universe());
  if (!g) fail(ErrorKind::input, "system does not live in a graph universe");
  return *g;
}

SeparationSystem build_Sk(const Graph& g, std::int64_t k) {
  auto U = std::make_shared<const GraphUniverse>(g);
  auto codes = U->elements_below(k);
  return SeparationSystem(U, std::move(codes));
}

namespace {

StarFamily tk_star_impl(const SeparationSystem& S, bool parallel) {
  const auto& U = graph_universe_of(S);
  const Graph& g = U.graph();
  using EdgeBits = std::bitset<192>;
  EdgeBits all_edges;
  for (std::size_t e = 0; e < g.edges.size(); ++e) all_edges.set(e);
  const std::uint32_t full = g.full();

  const std::size_t n = S.size();
  std::vector<std::uint32_t> side(n);
  std::vector<EdgeBits> inside(n);
  for (Id i = 0; i < n; ++i) {
    side[i] = GraphUniverse::side_a(S.code(i));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [u, v] = g.edges[e];
      if (((side[i] >> u) & 1U) && ((side[i] >> v) & 1U)) inside[i].set(e);
    }
  }
  auto pair_ok = [&](Id a, Id b) { return a != b && S.leq(a, S.inv(b)) && S.leq(b, S.inv(a)); };
  auto covers = [&](std::uint32_t v, const EdgeBits& e) { return v == full && e == all_edges; };

  std::vector<std::vector<IdSet>> found(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs()) if (parallel)
  for (std::int64_t ii = 0; ii < count; ++ii) {
    const Id i = static_cast<Id>(ii);
    if (S.degenerate(i)) continue;
    if (covers(side[i], inside[i])) found[i].push_back({i});
    for (Id j = i + 1; j < n; ++j) {
      if (S.degenerate(j) || !pair_ok(i, j)) continue;
      std::uint32_t vij = side[i] | side[j];
      EdgeBits eij = inside[i] | inside[j];
      if (covers(vij, eij)) found[i].push_back({i, j});
      for (Id l = j + 1; l < n; ++l) {
        if (S.degenerate(l) || !pair_ok(i, l) || !pair_ok(j, l)) continue;
        if (covers(vij | side[l], eij | inside[l])) found[i].push_back({i, j, l});
      }
    }
  }
  std::vector<IdSet> stars;
  for (auto& part : found) stars.insert(stars.end(), part.begin(), part.end());
  for (auto& s : standard_singletons(S)) stars.push_back(std::move(s));
  for (auto& s : regularity_singletons(S)) stars.push_back(std::move(s));
  return StarFamily(S.size(), std::move(stars));
}

}  // namespace

StarFamily tk_star(const SeparationSystem& S) { return tk_star_impl(S, true); }

OrientationSet graph_tangles(const Graph& g, std::int64_t k, const EnumLimits& limits) {
  auto S = build_Sk(g, k);
  auto F = tk_star(S);
  return enumerate_tangles(S, F, limits);
}

Decomposition decomposition_export(const SeparationSystem& S, const IdSet& N) {
  const auto& U = graph_universe_of(S);
  Decomposition d;
  d.tree = treeset_to_stree(S, N);
  d.nodes = stars_of(S, d.tree);
  for (const auto& node : d.nodes) {
    std::uint32_t part = U.graph().full();
    for (Id x : node) part &= GraphUniverse::side_b(S.code(x));
    d.parts.push_back(part);
  }
  return d;
}

Isomorphism vertex_isomorphism(const SeparationSystem& S, const SeparationSystem& S2,
                               const std::vector<std::size_t>& perm) {
  const auto& g = graph_universe_of(S).graph();
  const auto& g2 = graph_universe_of(S2).graph();
  if (perm.size() != g.size() || g2.size() != g.size()) fail(ErrorKind::input, "vertex map has the wrong size");
  auto image = [&](std::uint32_t mask) {
    std::uint32_t out = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
      if ((mask >> v) & 1U) out |= 1U << perm[v];
    return out;
  };
  Isomorphism phi;
  phi.from = &S;
  phi.to = &S2;
  for (Id i = 0; i < S.size(); ++i) {
    Code c = GraphUniverse::encode(image(GraphUniverse::side_a(S.code(i))), image(GraphUniverse::side_b(S.code(i))));
    auto j = S2.find(c);
    if (!j) fail(ErrorKind::input, "vertex map does not carry " + S.describe(i) + " into the target system");
    phi.map.push_back(*j);
  }
  return phi;
}

std::vector<std::vector<std::size_t>> graph_automorphisms(const Graph& g, std::size_t cap) {
  const std::size_t n = g.size();
  auto adj = g.neighbours();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t v) {
    if (out.size() >= cap) return;
    if (v == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || std::popcount(adj[v]) != std::popcount(adj[w])) continue;
      bool fits = true;
      for (std::size_t u = 0; u < v && fits; ++u)
        fits = (((adj[v] >> u) & 1U) != 0) == (((adj[w] >> perm[u]) & 1U) != 0);
      if (!fits) continue;
      used[w] = 1;
      perm[v] = w;
      extend(v + 1);
      used[w] = 0;
    }
  };
  extend(0);
  return out;
}

namespace reference {

SeparationSystem build_Sk(const Graph& g, std::int64_t k) {
  auto U = std::make_shared<const GraphUniverse>(g);
  auto codes = k <= 0 ? std::vector<Code>{} : U->separations_below(static_cast<std::size_t>(k), false);
  return SeparationSystem(U, std::move(codes));
}

StarFamily tk_star(const SeparationSystem& S) { return tk_star_impl(S, false); }

}  // namespace reference

}  // namespace tangles
