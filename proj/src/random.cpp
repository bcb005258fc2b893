#include "tangles/random.hpp"

#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tangles {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// One corner per crossing pair with neither corner present.
bool close_corners(std::set<Code>& codes, Code full, Rng& rng) {
  for (Code a : codes)
    for (Code b : codes) {
      Code m = a & b, j = a | b;
      if (codes.count(m) || codes.count(j)) continue;
      Code add = uniform(rng, 0, 1) ? m : j;
      codes.insert(add);
      codes.insert(full & ~add);
      return true;
    }
  return false;
}

}  // namespace

SeparationSystem random_submodular_system(Rng& rng, std::size_t max_unoriented) {
  if (max_unoriented < 1) fail(ErrorKind::input, "random system needs room for one separation");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t points = uniform(rng, 3, 5);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < points; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    auto U = std::make_shared<const BipartitionUniverse>(names);
    const Code full = U->full();
    const std::size_t target = uniform(rng, 1, std::min<std::size_t>(max_unoriented, std::size_t{1} << (points - 1)));
    std::set<Code> codes;
    bool ok = true;
    while (ok && codes.size() / 2 < target) {
      Code seed = uniform(rng, 0, full);
      codes.insert(seed);
      codes.insert(full & ~seed);
      while (ok && close_corners(codes, full, rng)) ok = codes.size() / 2 <= max_unoriented;
      ok = ok && codes.size() / 2 <= max_unoriented;
    }
    if (!ok) continue;
    SeparationSystem S(U, std::vector<Code>(codes.begin(), codes.end()));
    if (!is_submodular(S)) fail(ErrorKind::integrity, "corner closure left a crossing pair");
    return S;
  }
  fail(ErrorKind::resource, "could not draw a small submodular system");
}

StarFamily random_shift_closed_family(const SeparationSystem& S, Rng& rng, std::size_t seed_stars) {
  std::vector<Id> usable;
  for (Id i = 0; i < S.size(); ++i)
    if (!S.degenerate(i)) usable.push_back(i);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<IdSet> stars = standard_singletons(S);
    const std::size_t wanted = uniform(rng, 0, seed_stars);
    for (std::size_t t = 0; t < wanted * 20 && stars.size() < wanted + standard_singletons(S).size(); ++t) {
      if (usable.empty()) break;
      IdSet star;
      const std::size_t size = uniform(rng, 1, 3);
      for (std::size_t m = 0; m < size; ++m) star.push_back(usable[uniform(rng, 0, usable.size() - 1)]);
      star = make_set(std::move(star));
      if (is_star(S, star)) stars.push_back(std::move(star));
    }
    StarFamily F(S.size(), stars);
    bool broken = false;
    for (std::size_t rounds = 0; rounds < 10'000 && !broken; ++rounds) {
      auto w = shifting_violation(S, F);
      if (!w) return F;
      auto m = make_shift(S, w->r, w->s);
      IdSet image;
      for (Id x : F.members()[w->star]) image.push_back(shift_apply(S, m, x));
      image = make_set(std::move(image));
      if (!is_star(S, image)) {
        broken = true;
        break;
      }
      F = F.united({image});
    }
  }
  fail(ErrorKind::resource, "could not draw a shift-closed family");
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v});
  return Graph::make(std::move(names), std::move(edges));
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph permute_graph(const Graph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.size()) fail(ErrorKind::input, "permutation has the wrong size");
  std::vector<std::string> names(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) names[perm[v]] = g.names[v];
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges) edges.push_back({perm[u], perm[v]});
  return Graph::make(std::move(names), std::move(edges));
}

Graph random_symmetric_graph(Rng& rng, std::size_t max_vertices) {
  if (max_vertices < 3) fail(ErrorKind::input, "symmetric graphs need at least 3 vertices");
  for (;;) {
    const std::size_t piece = uniform(rng, 2, 4);
    const std::size_t copies = uniform(rng, 2, 3);
    if (1 + copies * (piece - 1) > max_vertices) continue;
    Graph h = random_graph(rng, piece, 0.7);
    auto adj = h.neighbours();
    // Keep the piece connected so the copies hang off the shared vertex.
    std::uint32_t reach = 1U, frontier = 1U;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < piece; ++v)
        if ((frontier >> v) & 1U) next |= adj[v];
      frontier = next & ~reach;
      reach |= next;
    }
    if (reach != h.full()) continue;
    Graph g = Graph::glued(std::vector<Graph>(copies, h));
    return permute_graph(g, random_permutation(rng, g.size()));
  }
}

}  // namespace tangles
