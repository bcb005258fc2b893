#include "corpus.hpp"

#include "tangles/canonical.hpp"
#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/refine.hpp"

#include <doctest.h>

#include <numeric>

using namespace tangles;

namespace {

OrientationSet pair_ab(const SeparationSystem& S) {
  OrientationSet set{corpus::principal(S, 'a'), corpus::principal(S, 'b')};
  canonicalize(set);
  return set;
}

// The isomorphism of the four-point universe induced by permuting points.
Isomorphism point_map(const SeparationSystem& S, const std::vector<int>& perm) {
  Isomorphism phi;
  phi.from = &S;
  phi.to = &S;
  for (Id i = 0; i < S.size(); ++i) {
    Code c = 0;
    for (int p = 0; p < 4; ++p)
      if ((S.code(i) >> p) & 1U) c |= Code{1} << perm[p];
    phi.map.push_back(S.id_of(c));
  }
  return phi;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("exclusivity") {
    auto S = corpus::u4();
    auto ab = pair_ab(S);
    CHECK(exclusive(S.parse("{b,c,d}"), ab));
    CHECK_FALSE(exclusive(S.parse("{}"), ab));
    CHECK_FALSE(exclusive(S.parse("{b,c,d}"), {}));
    const Id bcd = S.parse("{b,c,d}");
    CHECK(maximal_exclusive(S, corpus::principal(S, 'a'), ab, oriented_set(S, S.unoriented())) == IdSet{bcd});
    CHECK(maximal_exclusive(S, corpus::principal(S, 'a'), ab, {}).empty());
    OrientationSet alone{corpus::principal(S, 'a')};
    CHECK(maximal_exclusive(S, alone[0], alone, oriented_set(S, S.unoriented())) == maximal_in(S, alone[0]));
  }

  TEST_CASE("construction on two principal profiles") {
    auto S = corpus::u4();
    auto c = construction_41(S, pair_ab(S));
    CHECK(c.N == unoriented_set(S, {S.parse("{b,c,d}"), S.parse("{a,c,d}")}));
    CHECK(c.rounds_N.size() == 1);
    for (const auto& rec : c.records) CHECK(rec.m_set.size() == 1);
    CHECK(construction_41(S, {corpus::principal(S, 'a')}).N.empty());
    CHECK(construction_41(S, {}).N.empty());
  }

  TEST_CASE("construction on all four profiles") {
    auto S = corpus::u4();
    auto all = enumerate_profiles(S);
    REQUIRE(all.size() == 4);
    auto c = construction_41(S, all);
    CHECK(c.N.size() == 4);
    CHECK(distinguishes_set(S, c.N, all));
    CHECK(c.N == reference::construction_41(S, all).N);
  }

  TEST_CASE("good sets on four points") {
    auto S = corpus::u4();
    auto ab = pair_ab(S);
    auto rec = e_set(S, ab, 0, {0, 1}, {});
    REQUIRE(rec.r_p);
    const bool first_is_a = ab[0] == corpus::principal(S, 'a');
    CHECK(*rec.r_p == S.parse(first_is_a ? "{b,c,d}" : "{a,c,d}"));
    auto g = good_nested_set(S, ab);
    CHECK(!g.N.empty());
    CHECK(distinguishes_set(S, g.N, ab));
    for (Id s : g.N) CHECK(good(S, s, ab));
    CHECK(good_nested_set(S, {ab[0]}).N.empty());
    CHECK(find_well_distinguisher(S, ab[0], ab[1], {}) == S.rep(S.parse("{b,c,d}")));
    CHECK_THROWS_AS(find_well_distinguisher(S, ab[0], ab[0], {}), Error);
  }

  TEST_CASE("good sets of random systems") {
    Rng rng(53);
    std::size_t runs = 0;
    for (int t = 0; t < 200; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto profiles = enumerate_profiles(S);
      if (profiles.size() < 2 || profiles.size() > 4) continue;
      auto g = good_nested_set(S, profiles);
      CHECK(is_nested_set(S, g.N));
      CHECK(distinguishes_set(S, g.N, profiles));
      for (Id s : g.N) CHECK(good(S, s, profiles));
      CHECK(g.N == reference::good_nested_set(S, profiles).N);
      ++runs;
    }
    CHECK(runs > 20);
  }

  TEST_CASE("canonicity under point permutations") {
    auto S = corpus::u4();
    auto all = enumerate_profiles(S);
    std::vector<int> perm{0, 1, 2, 3};
    Isomorphism id = point_map(S, perm);
    CHECK(id.valid());
    CHECK(check_canonicity(build_construction_41, id, all));
    do {
      auto phi = point_map(S, perm);
      CHECK(phi.valid());
      CHECK(phi.lattice_compatible());
      CHECK(check_canonicity(build_construction_41, phi, all));
      CHECK(check_canonicity(build_good_nested_set, phi, all, true));
      CHECK(check_canonicity(build_construction_41, phi, pair_ab(S)) == true);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  TEST_CASE("a single tangle needs no separations") {
    Rng rng(59);
    for (int t = 0; t < 200; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto F = random_shift_closed_family(S, rng, 3).united(regularity_singletons(S));
      auto T = enumerate_tangles(S, F);
      if (T.size() != 1 || !closed_under_shifting(S, F)) continue;
      if (!check_star_family(S, F, true).friendly) continue;
      auto rc = refined_canonical(S, F, {}, true);
      CHECK(rc.Ntilde.empty());
      return;
    }
    FAIL("no single-tangle instance drawn");
  }

  TEST_CASE("profile checks") {
    auto S = corpus::u4();
    Orientation bad(S.size());
    CHECK_THROWS_AS(construction_41(S, {bad, corpus::principal(S, 'a')}), Error);
  }
}
