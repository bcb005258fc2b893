#include "tangles/canonical.hpp"

#include "tangles/core.hpp"
#include "tangles/duality.hpp"
#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

#include <algorithm>

namespace tangles {

namespace {

void check_profiles(const SeparationSystem& S, const OrientationSet& profiles) {
  if (auto bad = find_submodularity_violation(S))
    fail(ErrorKind::input, "system is not submodular at " + S.describe(bad->first) + ", " + S.describe(bad->second));
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    if (profiles[k].system_size() != S.size()) fail(ErrorKind::input, "profile belongs to another system");
    if (!is_profile(S, profiles[k])) fail(ErrorKind::input, "orientation " + std::to_string(k) + " is not a profile");
    for (std::size_t j = 0; j < k; ++j)
      if (profiles[j] == profiles[k]) fail(ErrorKind::input, "duplicate profiles cannot be distinguished");
  }
}

std::size_t containing_count(Id s, const OrientationSet& profiles, const std::vector<std::size_t>& among) {
  std::size_t n = 0;
  for (auto k : among) n += profiles[k].contains(s);
  return n;
}

IdSet all_ids(const SeparationSystem& S) {
  IdSet ids(S.size());
  for (Id i = 0; i < S.size(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

Construction41 construction_41_impl(const SeparationSystem& S, const OrientationSet& profiles, bool parallel);
GoodNestedSet good_nested_set_impl(const SeparationSystem& S, const OrientationSet& profiles, bool parallel);

bool exclusive(Id s, const OrientationSet& profiles) {
  return std::count_if(profiles.begin(), profiles.end(), [&](const Orientation& P) { return P.contains(s); }) == 1;
}

IdSet maximal_exclusive(const SeparationSystem& S, const Orientation& P, const OrientationSet& remaining,
                        const IdSet& domain) {
  IdSet inP;
  for (Id s : domain)
    if (P.contains(s)) inP.push_back(s);
  IdSet out;
  for (Id s : inP) {
    if (!exclusive(s, remaining)) continue;
    if (std::any_of(inP.begin(), inP.end(), [&](Id t) { return S.lt(s, t); })) continue;
    out.push_back(s);
  }
  return out;
}

Construction41 construction_41_impl(const SeparationSystem& S, const OrientationSet& profiles, bool parallel) {
  check_profiles(S, profiles);
  Construction41 out;
  std::vector<std::size_t> remaining(profiles.size());
  for (std::size_t k = 0; k < profiles.size(); ++k) remaining[k] = k;
  IdSet domain = all_ids(S);

  for (std::size_t round = 1; remaining.size() >= 2; ++round) {
    if (round > profiles.size()) fail(ErrorKind::integrity, "construction exceeded its round bound");
    OrientationSet rest;
    for (auto k : remaining) rest.push_back(profiles[k]);
    std::vector<IdSet> M(remaining.size());
    const auto n = static_cast<std::int64_t>(remaining.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs()) if (parallel)
    for (std::int64_t j = 0; j < n; ++j) M[j] = maximal_exclusive(S, rest[j], rest, domain);

    std::vector<std::size_t> kept;
    IdSet added;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (M[j].empty()) {
        kept.push_back(remaining[j]);
        continue;
      }
      Id acc = M[j].front();
      for (Id m : M[j]) {
        auto x = S.meet(acc, m);
        if (!x) fail(ErrorKind::integrity, "infimum of the maximal exclusive set leaves the system");
        acc = *x;
      }
      if (containing_count(acc, profiles, remaining) != 1 || !rest[j].contains(acc))
        fail(ErrorKind::integrity, "infimum " + S.describe(acc) + " is not exclusive");
      out.records.push_back({remaining[j], M[j], acc, round});
      added.push_back(S.rep(acc));
    }
    if (added.empty()) fail(ErrorKind::integrity, "construction round retired no profile");
    added.insert(added.end(), out.N.begin(), out.N.end());
    out.N = make_set(std::move(added));
    remaining = std::move(kept);
    domain = nested_members(S, out.N);
    out.rounds_N.push_back(out.N);
    out.rounds_size.push_back(domain.size());
  }

  if (!is_nested_set(S, out.N)) fail(ErrorKind::integrity, "construction output is not nested");
  if (undistinguished_pair(S, out.N, profiles)) fail(ErrorKind::integrity, "construction output does not distinguish");
  for (const auto& rec : out.records) {
    const auto& P = profiles[rec.profile];
    if (!closely_related(S, rec.s_p, P))
      fail(ErrorKind::integrity, S.describe(rec.s_p) + " is not closely related to its profile");
    if (!set_contains(lives_at(S, P, out.N), rec.s_p))
      fail(ErrorKind::integrity, "profile does not live at the node of " + S.describe(rec.s_p));
  }
  for (const auto& node : essential_nodes(S, out.N, profiles).inessential)
    for (Id s : node)
      if (!find_close_profile(S, S.inv(s), profiles))
        fail(ErrorKind::integrity, "inverse of " + S.describe(s) + " in an inessential node is not closely related");
  return out;
}

RefinedCanonical refined_canonical(const SeparationSystem& S, const StarFamily& F, const RefineOptions& options,
                                   std::optional<bool> closure_known) {
  bool closed = closure_known ? *closure_known : closed_under_shifting(S, F);
  auto report = check_star_family(S, F, closed, options.limits);
  if (!report.friendly) fail(ErrorKind::input, "refined_canonical needs a friendly star family");
  RefinedCanonical out;
  out.tangles = enumerate_tangles(S, F, options.limits);
  out.construction = construction_41(S, out.tangles);
  out.Ntilde = out.construction.N;
  out.inessential_in_Ntilde = essential_nodes(S, out.Ntilde, out.tangles, options.limits).inessential.size();
  RefineOptions inner = options;
  inner.tangles = &out.tangles;
  out.refined = refine_treeset(S, out.Ntilde, F, inner);
  if (!is_subset(out.Ntilde, out.refined.N)) fail(ErrorKind::integrity, "refinement lost a separation");
  return out;
}

GoodRecord e_set(const SeparationSystem& S, const OrientationSet& profiles, std::size_t index,
                 const std::vector<std::size_t>& current, const IdSet& M) {
  GoodRecord rec;
  rec.profile = index;
  if (current.size() < 2) return rec;
  const auto& P = profiles[index];
  for (Id s : nested_members(S, M)) {
    if (!P.contains(s) || containing_count(s, profiles, current) != 1) continue;
    if (!closely_related(S, s, P)) continue;
    const Id t = S.inv(s);
    bool well = std::any_of(current.begin(), current.end(),
                            [&](std::size_t q) { return q != index && closely_related(S, t, profiles[q]); });
    if (well) rec.e_set.push_back(s);
  }
  IdSet top;
  for (Id s : rec.e_set)
    if (std::none_of(rec.e_set.begin(), rec.e_set.end(), [&](Id t) { return S.lt(s, t); })) top.push_back(s);
  if (top.size() > 1) fail(ErrorKind::integrity, "E_P has several maximal elements");
  if (!top.empty()) rec.r_p = top.front();
  return rec;
}

GoodNestedSet good_nested_set_impl(const SeparationSystem& S, const OrientationSet& profiles, bool parallel) {
  check_profiles(S, profiles);
  GoodNestedSet out;
  std::vector<std::size_t> current(profiles.size());
  for (std::size_t k = 0; k < profiles.size(); ++k) current[k] = k;
  IdSet M;
  while (current.size() >= 2) {
    for (Id m : oriented_set(S, M))
      for (auto k : current)
        if (profiles[k].contains(m) != profiles[current.front()].contains(m))
          fail(ErrorKind::integrity, "profiles disagree on the chosen set");
    std::vector<GoodRecord> level(current.size());
    const auto n = static_cast<std::int64_t>(current.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs()) if (parallel)
    for (std::int64_t j = 0; j < n; ++j) {
      try {
        level[j] = e_set(S, profiles, current[j], current, M);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    IdSet fresh;
    std::vector<std::size_t> next;
    for (const auto& rec : level) {
      if (rec.r_p)
        fresh.push_back(S.rep(*rec.r_p));
      else
        next.push_back(rec.profile);
    }
    fresh = make_set(std::move(fresh));
    if (fresh.empty()) fail(ErrorKind::integrity, "no profile has a non-empty E_P");
    if (!is_nested_set(S, fresh)) fail(ErrorKind::integrity, "chosen maximal elements cross");
    IdSet grown = M;
    grown.insert(grown.end(), fresh.begin(), fresh.end());
    M = make_set(std::move(grown));
    out.levels.push_back(std::move(level));
    current = std::move(next);
  }
  out.N = M;
  if (!is_nested_set(S, out.N)) fail(ErrorKind::integrity, "good set is not nested");
  if (undistinguished_pair(S, out.N, profiles)) fail(ErrorKind::integrity, "good set does not distinguish");
  for (Id s : out.N)
    if (!good(S, s, profiles)) fail(ErrorKind::integrity, S.describe(s) + " is not good");
  return out;
}

Id find_well_distinguisher(const SeparationSystem& S, const Orientation& P, const Orientation& Q, const IdSet& M) {
  if (P == Q) fail(ErrorKind::input, "identical profiles have no distinguisher");
  IdSet members = nested_members(S, unoriented_set(S, M));
  for (Id s : members)
    if (s == S.rep(s) && !S.degenerate(s) && distinguishes_well(S, s, P, Q)) return s;
  fail(ErrorKind::integrity, "no well-distinguishing separation nested with the set");
}

bool Isomorphism::valid() const {
  if (!from || !to || map.size() != from->size() || from->size() != to->size()) return false;
  std::vector<char> hit(to->size(), 0);
  for (Id y : map) {
    if (y >= to->size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Id a = 0; a < from->size(); ++a) {
    if (map[from->inv(a)] != to->inv(map[a])) return false;
    for (Id b = 0; b < from->size(); ++b)
      if (from->leq(a, b) != to->leq(map[a], map[b])) return false;
  }
  return true;
}

bool Isomorphism::lattice_compatible() const {
  for (Id a = 0; a < from->size(); ++a)
    for (Id b = 0; b < from->size(); ++b)
      if (from->join(a, b).has_value() != to->join(map[a], map[b]).has_value()) return false;
  return true;
}

IdSet Isomorphism::apply_unoriented(const IdSet& N) const {
  IdSet out;
  for (Id x : N) out.push_back(to->rep(map[x]));
  return make_set(std::move(out));
}

Orientation Isomorphism::apply(const Orientation& O) const {
  Orientation out(to->size());
  for (Id x : O.ids()) out.insert(map[x]);
  return out;
}

OrientationSet Isomorphism::apply(const OrientationSet& set) const {
  OrientationSet out;
  for (const auto& O : set) out.push_back(apply(O));
  return out;
}

IdSet build_construction_41(const SeparationSystem& S, const OrientationSet& profiles) {
  return construction_41(S, profiles).N;
}

IdSet build_good_nested_set(const SeparationSystem& S, const OrientationSet& profiles) {
  return good_nested_set(S, profiles).N;
}

bool check_canonicity(const NestedBuilder& builder, const Isomorphism& phi, const OrientationSet& profiles,
                      bool lattice_only) {
  if (!phi.valid()) fail(ErrorKind::input, "map is not an isomorphism of separation systems");
  if (lattice_only && !phi.lattice_compatible()) fail(ErrorKind::input, "isomorphism is not lattice-compatible");
  IdSet mapped = phi.apply_unoriented(builder(*phi.from, profiles));
  IdSet rebuilt = builder(*phi.to, phi.apply(profiles));
  return mapped == rebuilt;
}

Construction41 construction_41(const SeparationSystem& S, const OrientationSet& profiles) {
  return construction_41_impl(S, profiles, true);
}

GoodNestedSet good_nested_set(const SeparationSystem& S, const OrientationSet& profiles) {
  return good_nested_set_impl(S, profiles, true);
}

namespace reference {

Construction41 construction_41(const SeparationSystem& S, const OrientationSet& profiles) {
  return construction_41_impl(S, profiles, false);
}

GoodNestedSet good_nested_set(const SeparationSystem& S, const OrientationSet& profiles) {
  return good_nested_set_impl(S, profiles, false);
}

}  // namespace reference

}  // namespace tangles
