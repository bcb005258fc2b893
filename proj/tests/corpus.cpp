#include "corpus.hpp"

#include "tangles/core.hpp"

namespace corpus {

SeparationSystem u4() {
  return SeparationSystem::full(std::make_shared<const BipartitionUniverse>(std::vector<std::string>{"a", "b", "c", "d"}));
}

Orientation principal(const SeparationSystem& S, char x) {
  const Code bit = Code{1} << (x - 'a');
  Orientation O(S.size());
  for (Id i = 0; i < S.size(); ++i)
    if ((S.code(i) & bit) == 0) O.insert(i);
  return O;
}

StarFamily u4_pair_family(const SeparationSystem& S) {
  auto stars = standard_singletons(S);
  for (auto& r : regularity_singletons(S)) stars.push_back(r);
  const Code ab = S.universe().parse("{a,b}");
  for (Id x = 0; x < S.size(); ++x)
    for (Id y = x; y < S.size(); ++y)
      for (Id z = y; z < S.size(); ++z) {
        IdSet sigma = make_set({x, y, z});
        if (is_star(S, sigma) && ((S.code(x) | S.code(y) | S.code(z)) & ab) == ab) stars.push_back(sigma);
      }
  return StarFamily(S.size(), stars);
}

Id u4_id(const SeparationSystem& S, const std::string& token) { return S.parse(token); }

Graph p3() { return Graph::make({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

Graph tripod() { return Graph::glued({Graph::complete(5), Graph::complete(5), Graph::complete(5)}); }

Case graph_case(const std::string& name, const Graph& g, std::int64_t k) {
  Case c;
  c.name = name;
  c.S = std::make_shared<const SeparationSystem>(build_Sk(g, k));
  c.F = tk_star(*c.S);
  c.tangles = enumerate_tangles(*c.S, c.F);
  c.graph = g;
  c.k = k;
  return c;
}

Case system_case(const std::string& name, Rng& rng) {
  Case c;
  c.name = name;
  c.S = std::make_shared<const SeparationSystem>(random_submodular_system(rng, 10));
  c.F = profile_family(*c.S);
  c.tangles = enumerate_profiles(*c.S);
  return c;
}

std::vector<Case> standard(bool with_tripod) {
  std::vector<Case> out;
  {
    Case c;
    c.name = "u4";
    c.S = std::make_shared<const SeparationSystem>(u4());
    c.F = profile_family(*c.S);
    c.tangles = enumerate_profiles(*c.S);
    out.push_back(std::move(c));
  }
  out.push_back(graph_case("p3-k2", p3(), 2));
  out.push_back(graph_case("c5-k2", Graph::cycle(5), 2));
  out.push_back(graph_case("c6-k3", Graph::cycle(6), 3));
  out.push_back(graph_case("k6-k3", Graph::complete(6), 3));
  out.push_back(graph_case("triangles-k2", Graph::glued({Graph::complete(3), Graph::complete(3), Graph::complete(3)}), 2));
  out.push_back(graph_case("k4-pair-k3", Graph::glued({Graph::complete(4), Graph::complete(4)}), 3));
  if (with_tripod) out.push_back(graph_case("tripod-k3", tripod(), 3));
  Rng rng(20240517);
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = 4 + i % 4;
    out.push_back(graph_case("graph-" + std::to_string(i), random_graph(rng, n, 0.5), 2 + i % 2));
  }
  for (int i = 0; i < 12; ++i) out.push_back(system_case("system-" + std::to_string(i), rng));
  return out;
}

}  // namespace corpus
