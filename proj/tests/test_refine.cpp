#include "corpus.hpp"
#include "oracle.hpp"

#include "tangles/canonical.hpp"
#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/refine.hpp"

#include <doctest.h>

using namespace tangles;

namespace {

// s ∈ P and s ∧ r ∈ S for every r ∈ P.
bool close_by_definition(const SeparationSystem& S, Id s, const Orientation& P) {
  if (!P.contains(s)) return false;
  for (Id r : P.ids())
    if (!S.meet(s, r)) return false;
  return true;
}

}  // namespace

TEST_SUITE("refine") {
  TEST_CASE("closeness in the full universe") {
    auto S = corpus::u4();
    auto Pa = corpus::principal(S, 'a');
    for (Id s : Pa.ids()) CHECK(closely_related(S, s, Pa));
    CHECK(closeness_violation(S, S.parse("{a}"), Pa) == S.parse("{a}"));
  }

  TEST_CASE("closeness matches its definition and maximal members are close") {
    Rng rng(41);
    std::size_t failures = 0;
    for (int t = 0; t < 150; ++t) {
      auto S = random_submodular_system(rng, 10);
      for (const auto& P : enumerate_profiles(S)) {
        for (Id s = 0; s < S.size(); ++s) {
          const bool want = close_by_definition(S, s, P);
          CHECK(closely_related(S, s, P) == want);
          if (P.contains(s) && !want) {
            auto r = closeness_violation(S, s, P);
            REQUIRE(r);
            CHECK(P.contains(*r));
            CHECK_FALSE(S.meet(s, *r));
            ++failures;
          }
        }
        for (Id m : maximal_in(S, P)) CHECK(closely_related(S, m, P));
      }
    }
    CHECK(failures > 0);
  }

  TEST_CASE("good and well-distinguishing separations on four points") {
    auto S = corpus::u4();
    OrientationSet ab{corpus::principal(S, 'a'), corpus::principal(S, 'b')};
    canonicalize(ab);
    const Id s = S.parse("{b,c,d}");
    CHECK(good(S, s, ab));
    CHECK_FALSE(good(S, s, {}));
    CHECK(distinguishes_well(S, S.rep(s), ab[0], ab[1]));
    CHECK_FALSE(distinguishes_well(S, S.parse("{c}"), ab[0], ab[1]));
  }

  TEST_CASE("guarded infima") {
    auto S = corpus::u4();
    auto Pa = corpus::principal(S, 'a');
    const Id s = S.parse("{b,c,d}");
    CHECK(guarded_inf(S, s, {}) == s);
    std::vector<CloseWitness> M{{S.parse("{b,c}"), Pa}, {S.parse("{c,d}"), Pa}};
    CHECK(guarded_inf(S, s, M) == S.parse("{c}"));
    CHECK(guarded_inf(S, s, M, &Pa) == S.parse("{c}"));
  }

  TEST_CASE("meets of close separations stay close") {
    // s ∧ inf(M) lies in S and stays close to P whenever each m ∈ M is
    // close to a profile containing s.
    Rng rng(43);
    std::size_t trials = 0;
    for (int t = 0; t < 300 && trials < 500; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto profiles = enumerate_profiles(S);
      for (const auto& P : profiles)
        for (Id s : P.ids()) {
          if (!closely_related(S, s, P)) continue;
          std::vector<CloseWitness> M;
          for (const auto& Q : profiles)
            if (Q.contains(s))
              for (Id m : Q.ids())
                if (closely_related(S, m, Q) && std::uniform_int_distribution<int>(0, 3)(rng) == 0) M.push_back({m, Q});
          Id x = guarded_inf(S, s, M, &P);
          CHECK(closely_related(S, x, P));
          ++trials;
        }
    }
    CHECK(trials >= 500);
  }

  TEST_CASE("refining the middle node on four points") {
    auto S = corpus::u4();
    auto F = corpus::u4_pair_family(S);
    auto T = enumerate_tangles(S, F);
    REQUIRE(T.size() == 2);
    CHECK(check_star_family(S, F, closed_under_shifting(S, F)).friendly);
    const Id a = S.parse("{a}"), b = S.parse("{b}");
    IdSet sigma = make_set({a, b});
    auto tree = refine_star(S, sigma, F);
    StarFamily Fp = F.united({{S.inv(a)}, {S.inv(b)}});
    CHECK(stree_validate(S, tree, &Fp).ok());
    CHECK(oracle::tree_over(S, tree, oracle::family_codes(S, Fp)));
    auto leaves = leaf_separations(S, tree);
    CHECK(set_contains(leaves, a));
    CHECK(set_contains(leaves, b));

    IdSet N = unoriented_set(S, {S.parse("{b,c,d}"), S.parse("{a,c,d}")});
    auto R = refine_treeset(S, N, F);
    CHECK(is_subset(N, R.N));
    for (std::size_t i = 0; i < R.nodes.size(); ++i) CHECK((R.node_in_F[i] || R.node_home[i]));
  }

  TEST_CASE("a singleton already in F") {
    auto S = corpus::u4();
    auto F = corpus::u4_pair_family(S);
    // {a,b,c}→ is a singleton star of F; its inverse {d}→ lies in both tangles.
    const Id s = S.parse("{a,b,c}");
    REQUIRE(F.contains({s}));
    auto tree = refine_star(S, {s}, F);
    StarFamily Fp = F.united({{S.inv(s)}});
    CHECK(stree_validate(S, tree, &Fp).ok());
    CHECK(set_contains(leaf_separations(S, tree), s));
  }

  TEST_CASE("nothing to refine") {
    auto S = corpus::u4();
    auto F = corpus::u4_pair_family(S);
    IdSet N{S.rep(S.parse("{b,c,d}"))};
    // Two nodes, each home to one tangle.
    auto R = refine_treeset(S, N, F);
    CHECK(R.N == N);
    CHECK(R.inessential.empty());
  }

  TEST_CASE("preconditions") {
    auto S = corpus::u4();
    auto F = corpus::u4_pair_family(S);
    CHECK_THROWS_AS(refine_star(S, {}, F), Error);
    try {
      refine_treeset(S, {}, F);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::domain);
    }
    try {
      refine_star(S, {S.parse("{b,c,d}")}, F);
      FAIL("expected a domain error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::domain);
    }
  }

  TEST_CASE("refinement of random friendly systems") {
    Rng rng(47);
    std::size_t refined = 0;
    for (int t = 0; t < 400; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto F = random_shift_closed_family(S, rng, 4).united(regularity_singletons(S));
      if (!closed_under_shifting(S, F)) continue;
      if (!check_star_family(S, F, true).friendly) continue;
      auto rc = refined_canonical(S, F, {}, true);
      const auto& R = rc.refined;
      CHECK(is_subset(rc.Ntilde, R.N));
      CHECK(is_nested_set(S, R.N));
      for (const auto& node : R.nodes) {
        bool ok = essential_star(node, rc.tangles) || F.contains(node);
        if (!ok)
          for (const auto& star : F.members()) {
            IdSet rest;
            for (Id x : star)
              if (!S.trivial(x)) rest.push_back(x);
            ok = ok || rest == node;
          }
        CHECK(ok);
      }
      refined += R.inessential.empty() ? 0 : 1;
    }
    CHECK(refined > 0);
  }
}
