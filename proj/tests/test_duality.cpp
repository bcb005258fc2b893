#include "corpus.hpp"
#include "oracle.hpp"

#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"

#include <doctest.h>

using namespace tangles;

namespace {

SeparationSystem single() {
  auto U = std::make_shared<const BipartitionUniverse>(std::vector<std::string>{"a", "b"});
  return SeparationSystem(U, {U->parse("{}"), U->parse("{a,b}")});
}

// s emulates r: s ≥ r and s ∨ x ∈ S for every x ≥ r other than r̄.
bool emulates_by_definition(const SeparationSystem& S, Id s, Id r) {
  if (!S.leq(r, s)) return false;
  for (Id x = 0; x < S.size(); ++x)
    if (S.leq(r, x) && x != S.inv(r) && !S.join(s, x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("duality") {
  TEST_CASE("emulation in the full universe") {
    auto S = corpus::u4();
    for (Id r = 0; r < S.size(); ++r) {
      if (S.trivial(r) || S.degenerate(r)) {
        CHECK_THROWS_AS(emulates(S, r, r), Error);
        continue;
      }
      for (Id s = 0; s < S.size(); ++s) CHECK(emulates(S, s, r) == S.leq(r, s));
    }
    const Id a = S.parse("{a}"), b = S.parse("{b}");
    CHECK(emulation_violation(S, b, a) == b);
  }

  TEST_CASE("emulation matches its definition on random systems") {
    Rng rng(17);
    std::size_t negative = 0;
    for (int t = 0; t < 80; ++t) {
      auto S = random_submodular_system(rng, 10);
      for (Id r = 0; r < S.size(); ++r) {
        if (S.trivial(r) || S.degenerate(r)) continue;
        for (Id s = 0; s < S.size(); ++s) {
          const bool want = emulates_by_definition(S, s, r);
          CHECK(emulates(S, s, r) == want);
          negative += want ? 0 : 1;
        }
      }
    }
    CHECK(negative > 0);
  }

  TEST_CASE("shift images") {
    auto S = corpus::u4();
    const Id r = S.parse("{a}"), s = S.parse("{a,c}"), x = S.parse("{a,b}");
    auto m = make_shift(S, r, s);
    CHECK(shift_apply(S, m, x) == S.parse("{a,b,c}"));
    CHECK(shift_apply(S, m, s) == s);
    CHECK(shift_apply(S, m, S.inv(x)) == S.inv(shift_apply(S, m, x)));
    CHECK(shift_apply(S, m, S.parse("{b}")) == S.parse("{b}"));
    CHECK_THROWS_AS(shift_apply(S, m, S.size()), Error);
    CHECK_THROWS_AS(make_shift(S, r, S.parse("{b}")), Error);
  }

  TEST_CASE("shift closure and its witnesses") {
    auto S = corpus::u4();
    StarFamily empty(S.size(), {});
    CHECK(closed_under_shifting(S, empty));
    CHECK(emulates_for_F(S, S.parse("{a,b}"), S.parse("{a}"), empty));

    Rng rng(23);
    bool mutilated = false;
    for (int t = 0; t < 40 && !mutilated; ++t) {
      auto F = random_shift_closed_family(S, rng, 4);
      REQUIRE(closed_under_shifting(S, F));
      for (Id r = 0; r < S.size() && !mutilated; ++r) {
        if (S.trivial(r) || S.degenerate(r)) continue;
        for (Id s = 0; s < S.size() && !mutilated; ++s) {
          if (!emulates(S, s, r)) continue;
          CHECK(emulates_for_F(S, s, r, F));
          auto m = make_shift(S, r, s);
          for (const auto& sigma : F.members()) {
            if (set_contains(sigma, S.inv(r))) continue;
            if (std::none_of(sigma.begin(), sigma.end(), [&](Id y) { return S.leq(r, y); })) continue;
            if (!std::all_of(sigma.begin(), sigma.end(), [&](Id y) { return in_shift_domain(S, r, y); })) continue;
            IdSet image;
            for (Id y : sigma) image.push_back(shift_apply(S, m, y));
            image = make_set(image);
            if (image == sigma) continue;
            std::vector<IdSet> rest;
            for (const auto& other : F.members())
              if (other != image) rest.push_back(other);
            StarFamily broken(S.size(), rest);
            CHECK_FALSE(emulates_for_F(S, s, r, broken));
            auto w = shifting_violation(S, broken);
            REQUIRE(w);
            CHECK(w->s == reference::shifting_violation(S, broken)->s);
            mutilated = true;
            break;
          }
        }
      }
    }
    CHECK(mutilated);
  }

  TEST_CASE("shifting trees") {
    auto S = corpus::u4();
    const Id r = S.parse("{a}"), s = S.parse("{a,c}");
    STree edge;
    edge.vertices = 2;
    edge.edges = {{0, 1, r}};
    auto same = shift_stree(S, edge, r, r);
    CHECK(canonical_form(S, same).edges.size() == 1);
    CHECK(label_count(S, same, r) == 1);
    StarFamily F(S.size(), {{r}, {S.inv(r)}, {s}});
    auto moved = shift_stree(S, edge, r, s, &F);
    CHECK(moved.edges.size() == 1);
    CHECK(label_count(S, moved, s) == 1);

    IdSet N = unoriented_set(S, {S.parse("{b,c,d}"), S.parse("{a,c,d}")});
    auto T = treeset_to_stree(S, N);
    auto shifted = shift_stree(S, T, r, s);
    CHECK(stree_validate(S, shifted).is_stree);
    CHECK(set_contains(leaf_separations(S, shifted), s));
  }

  TEST_CASE("one separation") {
    auto S = single();
    REQUIRE(is_submodular(S));
    const Id lo = S.parse("{}");
    StarFamily both(S.size(), {{lo}, {S.inv(lo)}});
    auto res = duality_decide(S, both);
    REQUIRE(res.tree);
    CHECK(res.tree->edges.size() == 1);
    CHECK_FALSE(res.has_tangle());
    StarFamily none(S.size(), {});
    auto open = duality_decide(S, none);
    REQUIRE(open.tangle);
    CHECK(is_consistent(S, *open.tangle));
  }

  TEST_CASE("duality agrees with the exhaustive scan") {
    Rng rng(29);
    std::size_t trees = 0, tangles = 0;
    for (int t = 0; t < 120; ++t) {
      auto S = random_submodular_system(rng, 10);
      auto F = random_shift_closed_family(S, rng, 4);
      auto fam = oracle::family_codes(S, F);
      const bool any = !oracle::tangles_by_scan(S, fam).empty();
      auto res = duality_decide(S, F);
      CHECK(res.has_tangle() == any);
      if (res.tangle) {
        CHECK(oracle::f_tangle(S, oracle::codes_of(S, *res.tangle), fam));
        ++tangles;
      } else {
        REQUIRE(res.tree);
        CHECK(oracle::tree_over(S, *res.tree, fam));
        CHECK(stree_validate(S, *res.tree, &F).ok());
        ++trees;
      }
    }
    CHECK(trees > 0);
    CHECK(tangles > 0);
  }

  TEST_CASE("bad families are input errors") {
    auto S = corpus::u4();
    StarFamily empty(S.size(), {});
    try {
      duality_decide(S, empty);
      FAIL("expected an input error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::input);
    }
  }

  TEST_CASE("separability") {
    CHECK(check_separable(corpus::u4()));
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
      auto S = random_submodular_system(rng, 10);
      CHECK(check_separable(S));
      CHECK(separability_violation(S) == reference::separability_violation(S));
    }
    // Some inversion-closed subsystem of the four-point universe must fail.
    auto U4 = corpus::u4();
    bool found = false;
    for (int t = 0; t < 2000 && !found; ++t) {
      std::vector<Code> codes;
      for (Id x : U4.unoriented())
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
          codes.push_back(U4.code(x));
          codes.push_back(U4.code(U4.inv(x)));
        }
      SeparationSystem sub(U4.universe_ptr(), codes);
      if (!check_separable(sub)) {
        CHECK_FALSE(is_submodular(sub));
        found = true;
      }
    }
    CHECK(found);
  }
}
