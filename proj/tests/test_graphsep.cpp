#include "corpus.hpp"
#include "oracle.hpp"

#include "tangles/canonical.hpp"
#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/graphsep.hpp"

#include <doctest.h>

#include <set>

using namespace tangles;

namespace {

std::set<oracle::CodeSet> as_codes(const SeparationSystem& S, const OrientationSet& set) {
  std::set<oracle::CodeSet> out;
  for (const auto& O : set) out.insert(oracle::codes_of(S, O));
  return out;
}

std::size_t tangle_count(const Graph& g, std::int64_t k) { return graph_tangles(g, k).size(); }

Code gsep(std::uint32_t a, std::uint32_t b) { return GraphUniverse::encode(a, b); }

}  // namespace

TEST_SUITE("graphsep") {
  TEST_CASE("graphs validate their input") {
    CHECK_THROWS_AS(Graph::make({"a"}, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{0, 2}}), Error);
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_AS(Graph::make(many, {}), Error);
    CHECK(Graph::complete(4).edges.size() == 6);
    CHECK(Graph::cycle(5).edges.size() == 5);
    CHECK(Graph::path(4).edges.size() == 3);
    CHECK(corpus::tripod().size() == 13);
    CHECK(corpus::tripod().edges.size() == 30);
  }

  TEST_CASE("separations of the path") {
    auto g = corpus::p3();
    auto S = build_Sk(g, 2);
    CHECK(S.contains(gsep(0b011, 0b110)));
    CHECK(S.contains(gsep(0b010, 0b111)));
    for (Id i = 0; i < S.size(); ++i) CHECK(S.order(i) <= Order(1));
    auto want = oracle::graph_separations(g, 2);
    CHECK(std::set<Code>(S.codes().begin(), S.codes().end()) == want);
    CHECK(S.describe(S.id_of(gsep(0b011, 0b110))) == "{a,b}|{b,c}");
    CHECK(S.parse("{a,b}|{b,c}") == S.id_of(gsep(0b011, 0b110)));
    auto S1 = build_Sk(g, 1);
    CHECK(S1.size() == 2);
  }

  TEST_CASE("separations match the assignment scan") {
    Rng rng(61);
    for (int t = 0; t < 40; ++t) {
      auto g = random_graph(rng, 2 + t % 6, 0.45);
      for (std::int64_t k = 1; k <= 3; ++k) {
        auto S = build_Sk(g, k);
        CHECK(std::set<Code>(S.codes().begin(), S.codes().end()) == oracle::graph_separations(g, k));
        CHECK(S.codes() == reference::build_Sk(g, k).codes());
        CHECK(is_submodular(S));
        auto F = tk_star(S);
        CHECK(F.members() == reference::tk_star(S).members());
      }
    }
    auto u = std::make_shared<const GraphUniverse>(Graph::path(15));
    CHECK_THROWS_AS(u->elements(), Error);
  }

  TEST_CASE("tangle counts of small graphs") {
    CHECK(tangle_count(corpus::p3(), 2) == 2);
    CHECK(tangle_count(Graph::cycle(5), 2) == 1);
    CHECK(tangle_count(Graph::complete(6), 3) == 1);
    CHECK(tangle_count(Graph::make({"a", "b", "c"}, {}), 2) == 0);
    CHECK(tangle_count(Graph::make({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}}), 2) == 3);
    for (auto [g, k] : std::vector<std::pair<Graph, std::int64_t>>{{corpus::p3(), 2},
                                                                    {Graph::cycle(5), 2},
                                                                    {Graph::complete(6), 3},
                                                                    {Graph::make({"a", "b", "c"}, {}), 2}}) {
      auto S = build_Sk(g, k);
      CHECK(as_codes(S, graph_tangles(g, k)) == oracle::graph_tangles(g, k));
    }
  }

  TEST_CASE("tangles of random graphs match both oracles") {
    Rng rng(67);
    for (int t = 0; t < 60; ++t) {
      auto g = random_graph(rng, 3 + t % 4, 0.5);
      const std::int64_t k = 2 + t % 2;
      auto S = build_Sk(g, k);
      auto F = tk_star(S);
      auto got = as_codes(S, enumerate_tangles(S, F));
      CHECK(got == oracle::graph_tangles(g, k));
      if (S.unoriented().size() <= 16) CHECK(got == oracle::tangles_by_scan(S, oracle::family_codes(S, F)));
    }
  }

  TEST_CASE("three cliques on a shared vertex") {
    auto g = corpus::tripod();
    auto S = build_Sk(g, 3);
    CHECK(is_submodular(S));
    CHECK_FALSE(find_order_submodularity_violation(S));
    auto F = tk_star(S);
    auto T = enumerate_tangles(S, F);
    CHECK(T.size() == 3);
    CHECK(as_codes(S, T) == oracle::graph_tangles(g, 3));

    // Each K5 hangs off vertex 0; the cut {0} separates one from the rest.
    const std::uint32_t all = g.full();
    const std::uint32_t first = 0b11110;
    const Id cut = S.id_of(gsep(first | 1U, (all & ~first)));
    std::size_t split = 0;
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j)
        if (distinguishes(S, cut, T[i], T[j])) {
          CHECK(distinguishes_efficiently(S, cut, T[i], T[j]));
          CHECK(distinguishes_well(S, S.rep(cut), T[i], T[j]));
          ++split;
        }
    CHECK(split == 2);
    // An order-2 separation cutting the same clique off is not efficient.
    const Id wide = S.id_of(gsep(first | 1U | (1U << 5), all & ~first));
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j)
        if (distinguishes(S, wide, T[i], T[j])) CHECK_FALSE(distinguishes_efficiently(S, wide, T[i], T[j]));

    auto c = construction_41(S, T);
    CHECK(distinguishes_set(S, c.N, T));
    CHECK(c.N.size() == 3);
    auto d = decomposition_export(S, c.N);
    std::size_t with_clique = 0;
    for (auto part : d.parts)
      for (std::uint32_t clique : {0b11111U, 0b111100001U, 0b1111000000001U}) with_clique += (part & clique) == clique;
    CHECK(with_clique == 3);
  }

  TEST_CASE("decompositions") {
    auto g = corpus::p3();
    auto S = build_Sk(g, 2);
    auto empty = decomposition_export(S, {});
    REQUIRE(empty.parts.size() == 1);
    CHECK(empty.parts[0] == g.full());
    const Id s = S.id_of(gsep(0b011, 0b110));
    auto one = decomposition_export(S, {S.rep(s)});
    REQUIRE(one.parts.size() == 2);
    std::set<std::uint32_t> parts(one.parts.begin(), one.parts.end());
    CHECK(parts == std::set<std::uint32_t>{0b011, 0b110});
    CHECK(describe_part(g, 0b011) == "{a,b}");
  }

  TEST_CASE("automorphisms and induced maps") {
    CHECK(graph_automorphisms(Graph::complete(3)).size() == 6);
    CHECK(graph_automorphisms(Graph::path(4)).size() == 2);
    CHECK(graph_automorphisms(Graph::cycle(5)).size() == 10);
    CHECK(graph_automorphisms(corpus::tripod()).size() == 6 * 24 * 24 * 24);
    auto g = Graph::cycle(5);
    auto S = build_Sk(g, 2);
    for (const auto& perm : graph_automorphisms(g)) {
      auto phi = vertex_isomorphism(S, S, perm);
      CHECK(phi.valid());
      CHECK(phi.lattice_compatible());
    }
    Rng rng(71);
    auto h = random_graph(rng, 5, 0.5);
    auto perm = random_permutation(rng, 5);
    auto h2 = permute_graph(h, perm);
    auto Sh = build_Sk(h, 2), Sh2 = build_Sk(h2, 2);
    auto phi = vertex_isomorphism(Sh, Sh2, perm);
    CHECK(phi.valid());
    auto T = graph_tangles(h, 2);
    auto mapped = phi.apply(T);
    canonicalize(mapped);
    CHECK(mapped == graph_tangles(h2, 2));
  }

  TEST_CASE("symmetric instances") {
    Rng rng(73);
    for (int t = 0; t < 10; ++t) {
      auto g = random_symmetric_graph(rng, 10);
      CHECK(g.size() <= 10);
      CHECK(graph_automorphisms(g, 2).size() == 2);
    }
  }
}
