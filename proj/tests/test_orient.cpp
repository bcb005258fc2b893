#include "corpus.hpp"
#include "oracle.hpp"

#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/orient.hpp"

#include <doctest.h>

#include <set>

using namespace tangles;

namespace {

std::set<oracle::CodeSet> as_codes(const SeparationSystem& S, const OrientationSet& set) {
  std::set<oracle::CodeSet> out;
  for (const auto& O : set) out.insert(oracle::codes_of(S, O));
  return out;
}

}  // namespace

TEST_SUITE("orient") {
  TEST_CASE("principal orientations of four points") {
    auto S = corpus::u4();
    auto Pa = corpus::principal(S, 'a');
    CHECK(is_orientation(S, Pa));
    CHECK(is_consistent(S, Pa));
    CHECK(is_profile(S, Pa));
    CHECK(is_regular(S, Pa));
    CHECK(maximal_in(S, Pa) == IdSet{S.parse("{b,c,d}")});
    Orientation with_top = Pa;
    with_top.erase(S.parse("{}"));
    with_top.insert(S.parse("{a,b,c,d}"));
    CHECK_FALSE(is_regular(S, with_top));
  }

  TEST_CASE("inconsistent pair") {
    auto S = corpus::u4();
    IdSet O = make_set({S.parse("{b,c,d}"), S.parse("{a,c,d}")});
    CHECK_FALSE(is_consistent(S, O));
    Orientation part(S.size(), O);
    auto bad = find_inconsistency(S, part);
    REQUIRE(bad);
    CHECK(S.lt(S.inv(bad->first), bad->second));
    CHECK(is_consistent(S, IdSet{}));
  }

  TEST_CASE("profiles and tangles match the exhaustive scan on four points") {
    auto S = corpus::u4();
    auto PS = profile_family(S);
    auto fam = oracle::family_codes(S, PS);
    std::size_t profiles = 0;
    for (const auto& codes : oracle::all_orientations(S)) {
      IdSet ids;
      for (Code c : codes) ids.push_back(S.id_of(c));
      Orientation O(S.size(), make_set(ids));
      const bool prof = oracle::profile(S, codes);
      CHECK(is_consistent(S, O) == oracle::consistent(S, codes));
      CHECK(is_profile(S, O) == prof);
      CHECK(is_f_tangle(S, O, PS) == prof);
      if (!oracle::consistent(S, codes)) CHECK_FALSE(is_profile(S, O));
      profiles += prof ? 1 : 0;
    }
    CHECK(profiles == 4);
    CHECK(as_codes(S, enumerate_tangles(S, PS)) == oracle::profiles_by_scan(S));
    CHECK(as_codes(S, enumerate_profiles(S)) == oracle::profiles_by_scan(S));
    for (char x : std::string("abcd")) CHECK(is_profile(S, corpus::principal(S, x)));
  }

  TEST_CASE("both singletons kill every orientation") {
    auto S = corpus::u4();
    const Id s = S.parse("{a,b}");
    StarFamily F(S.size(), {{s}, {S.inv(s)}});
    CHECK(enumerate_tangles(S, F).empty());
    StarFamily none(S.size(), {});
    for (const auto& codes : oracle::all_orientations(S)) {
      IdSet ids;
      for (Code c : codes) ids.push_back(S.id_of(c));
      Orientation O(S.size(), make_set(ids));
      CHECK_FALSE(is_f_tangle(S, O, F));
      CHECK(is_f_tangle(S, O, none) == oracle::consistent(S, codes));
    }
  }

  TEST_CASE("distinguishing") {
    auto S = corpus::u4();
    auto Pa = corpus::principal(S, 'a'), Pb = corpus::principal(S, 'b');
    const Id s = S.parse("{b,c,d}");
    CHECK(distinguishes(S, s, Pa, Pb));
    CHECK_FALSE(distinguishes(S, s, Pa, Pa));
    CHECK(distinguishes_set(S, {}, {Pa}));
    CHECK_FALSE(distinguishes_set(S, {}, {Pa, Pb}));
    CHECK(distinguishes_set(S, {S.rep(s)}, {Pa, Pb}));
  }

  TEST_CASE("essential stars") {
    auto S = corpus::u4();
    OrientationSet two{corpus::principal(S, 'a'), corpus::principal(S, 'b')};
    canonicalize(two);
    CHECK(essential_star({}, two));
    CHECK_FALSE(essential_star({}, {}));
    CHECK(essential_star({S.parse("{b,c,d}")}, two));
    CHECK_FALSE(essential_star(make_set({S.parse("{a}"), S.parse("{b}")}), two));
  }

  TEST_CASE("family report") {
    auto S = corpus::u4();
    StarFamily empty(S.size(), {});
    auto rep = check_star_family(S, empty, std::nullopt);
    CHECK_FALSE(rep.standard);
    CHECK(rep.missing_standard);
    auto PS = profile_family(S);
    CHECK(check_star_family(S, PS, std::nullopt).profile_respecting);
  }

  TEST_CASE("tangles of random systems agree with the exhaustive scan") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto F = random_shift_closed_family(S, rng, 3);
      auto want = oracle::tangles_by_scan(S, oracle::family_codes(S, F));
      CHECK(as_codes(S, enumerate_tangles(S, F)) == want);
      EnumOptions opt;
      opt.family = &F;
      CHECK(as_codes(S, reference::enumerate(S, opt)) == want);
      CHECK(as_codes(S, enumerate_profiles(S)) == oracle::profiles_by_scan(S));
      for (const auto& P : enumerate_tangles(S, F.united(regularity_singletons(S)))) CHECK(is_regular(S, P));
    }
  }

  TEST_CASE("enumeration cap is a resource error") {
    auto S = corpus::u4();
    EnumLimits tiny;
    tiny.max_seps = 2;
    try {
      enumerate_profiles(S, tiny);
      FAIL("expected a resource error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::resource);
      CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
  }

  TEST_CASE("efficient distinguishers on small graphs") {
    Graph g = Graph::glued({Graph::complete(4), Graph::complete(4)});
    auto S = build_Sk(g, 3);
    auto F = tk_star(S);
    auto T = enumerate_tangles(S, F);
    REQUIRE(T.size() == 2);
    std::optional<Id> cut;
    for (Id i = 0; i < S.size(); ++i)
      if (S.order(i) == Order(1) && distinguishes(S, i, T[0], T[1])) cut = i;
    REQUIRE(cut);
    CHECK(distinguishes_efficiently(S, *cut, T[0], T[1]));
    for (Id i = 0; i < S.size(); ++i)
      if (S.order(i) == Order(2) && !S.degenerate(i) && distinguishes(S, i, T[0], T[1]))
        CHECK_FALSE(distinguishes_efficiently(S, i, T[0], T[1]));
  }
}
