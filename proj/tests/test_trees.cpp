#include "corpus.hpp"
#include "oracle.hpp"

#include "tangles/error.hpp"
#include "tangles/trees.hpp"

#include <doctest.h>

#include <set>

using namespace tangles;

namespace {

struct Fixture {
  SeparationSystem S = corpus::u4();
  Id a = S.parse("{a}");
  Id b = S.parse("{b}");
  IdSet N = unoriented_set(S, {S.parse("{b,c,d}"), S.parse("{a,c,d}")});
  OrientationSet ab = [this] {
    OrientationSet set{corpus::principal(S, 'a'), corpus::principal(S, 'b')};
    canonicalize(set);
    return set;
  }();
};

std::set<oracle::CodeSet> node_codes(const SeparationSystem& S, const std::vector<IdSet>& nodes) {
  std::set<oracle::CodeSet> out;
  for (const auto& n : nodes) {
    oracle::CodeSet c;
    for (Id x : n) c.push_back(S.code(x));
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("nodes of the two-separation tree set") {
    Fixture f;
    CHECK(is_tree_set(f.S, f.N));
    CHECK(is_regular_tree_set(f.S, f.N));
    auto nodes = nodes_of(f.S, f.N);
    CHECK(nodes.size() == 3);
    std::vector<Code> reps;
    for (Id x : f.N) reps.push_back(f.S.code(x));
    CHECK(node_codes(f.S, nodes) == oracle::nodes_by_scan(f.S, reps));
    auto has = [&](IdSet want) { return std::find(nodes.begin(), nodes.end(), make_set(want)) != nodes.end(); };
    CHECK(has({f.S.parse("{b,c,d}")}));
    CHECK(has({f.S.parse("{a,c,d}")}));
    CHECK(has({f.a, f.b}));
  }

  TEST_CASE("nodes of small nested sets") {
    auto S = corpus::u4();
    auto empty = nodes_of(S, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    const Id ab = S.parse("{a,b}");
    auto one = nodes_of(S, {S.rep(ab)});
    CHECK(one.size() == 2);
    CHECK(std::find(one.begin(), one.end(), IdSet{ab}) != one.end());
    CHECK(std::find(one.begin(), one.end(), IdSet{S.inv(ab)}) != one.end());
  }

  TEST_CASE("where profiles live") {
    Fixture f;
    CHECK(lives_at(f.S, corpus::principal(f.S, 'a'), f.N) == IdSet{f.S.parse("{b,c,d}")});
    CHECK(lives_at(f.S, corpus::principal(f.S, 'b'), f.N) == IdSet{f.S.parse("{a,c,d}")});
    CHECK(lives_at(f.S, corpus::principal(f.S, 'a'), {}).empty());
    auto classes = essential_nodes(f.S, f.N, f.ab);
    CHECK(classes.essential.size() == 2);
    REQUIRE(classes.inessential.size() == 1);
    CHECK(classes.inessential[0] == make_set({f.a, f.b}));
    CHECK(essential_nodes(f.S, f.N, {}).inessential.size() == 3);
    CHECK(essential_nodes(f.S, {}, f.ab).essential.size() == 1);
    CHECK(essential_nodes(f.S, {}, {}).inessential.size() == 1);
  }

  TEST_CASE("tree sets and S-trees convert both ways") {
    Fixture f;
    auto T = treeset_to_stree(f.S, f.N);
    CHECK(T.vertices == 3);
    CHECK(T.edges.size() == 2);
    CHECK(stree_to_treeset(f.S, T) == f.N);
    auto rep = stree_validate(f.S, T);
    CHECK(rep.is_stree);
    CHECK(rep.irredundant);
    CHECK(rep.tight);
    CHECK(rep.order_preserving);
    CHECK(leaf_separations(f.S, T) == make_set({f.a, f.b}));
    StarFamily own(f.S.size(), stars_of(f.S, T));
    CHECK(stree_validate(f.S, T, &own).over_F == true);
    CHECK(oracle::tree_over(f.S, T, oracle::family_codes(f.S, own)));

    const Id ab = f.S.parse("{a,b}");
    auto single = treeset_to_stree(f.S, {f.S.rep(ab)});
    CHECK(single.vertices == 2);
    CHECK(single.edges.size() == 1);
    CHECK(leaf_separations(f.S, single) == make_set({ab, f.S.inv(ab)}));
    CHECK(stree_to_treeset(f.S, single) == IdSet{f.S.rep(ab)});
    auto lone = treeset_to_stree(f.S, {});
    CHECK(lone.vertices == 1);
    CHECK(lone.edges.empty());
  }

  TEST_CASE("trivial labels are rejected") {
    auto S = corpus::u4();
    STree T;
    T.vertices = 2;
    T.edges.push_back({0, 1, S.parse("{}")});
    try {
      stree_to_treeset(S, T);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::domain);
    }
    CHECK(stree_image(S, T).size() == 1);
  }

  TEST_CASE("redundancy and tightness") {
    auto S = corpus::u4();
    const Id a = S.parse("{a}"), b = S.parse("{b}");
    STree twin;
    twin.vertices = 3;
    twin.edges = {{1, 0, a}, {2, 0, a}};
    CHECK_FALSE(stree_validate(S, twin).irredundant);
    STree loose;
    loose.vertices = 3;
    loose.edges = {{1, 0, a}, {2, 0, S.inv(a)}};
    CHECK_FALSE(stree_validate(S, loose).tight);

    STree redundant;
    redundant.vertices = 4;
    redundant.edges = {{1, 0, a}, {2, 0, a}, {3, 0, b}};
    auto reduced = irredundant_reduction(S, redundant);
    CHECK(reduced.vertices == 3);
    CHECK(stree_validate(S, reduced).ok());
    auto again = irredundant_reduction(S, reduced);
    CHECK(canonical_form(S, again).edges.size() == canonical_form(S, reduced).edges.size());
    CHECK(leaf_count(S, reduced, a) == 1);
  }

  TEST_CASE("random nested sets match the scanned nodes") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
      auto S = random_submodular_system(rng, 10);
      IdSet N;
      for (Id r : S.unoriented()) {
        if (S.trivial(r) || S.trivial(S.inv(r)) || S.degenerate(r)) continue;
        IdSet trial = N;
        trial.push_back(r);
        trial = make_set(trial);
        if (is_nested_set(S, trial) && std::uniform_int_distribution<int>(0, 1)(rng)) N = trial;
      }
      std::vector<Code> reps;
      for (Id x : N) reps.push_back(S.code(x));
      CHECK(node_codes(S, nodes_of(S, N)) == oracle::nodes_by_scan(S, reps));
      if (is_regular_tree_set(S, N)) {
        auto T = treeset_to_stree(S, N);
        CHECK(stree_to_treeset(S, T) == N);
        CHECK(stree_validate(S, T).is_stree);
      }
    }
  }
}
