#include "tangles/orient.hpp"

#include "tangles/error.hpp"

#include <algorithm>

namespace tangles {

Orientation::Orientation(std::size_t system_size, const IdSet& members) : bits_(system_size) {
  for (Id i : members) {
    if (i >= system_size) fail(ErrorKind::input, "orientation member outside the system");
    bits_.set(i);
  }
}

bool Orientation::contains_all(const IdSet& set) const {
  return std::all_of(set.begin(), set.end(), [&](Id i) { return contains(i); });
}

IdSet Orientation::ids() const {
  IdSet out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i))
    out.push_back(static_cast<Id>(i));
  return out;
}

bool operator<(const Orientation& a, const Orientation& b) {
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
  // The first differing id decides; the orientation containing it is
  // lexicographically smaller as an id list, unless the other list ended.
  auto diff = a.bits_ ^ b.bits_;
  auto i = diff.find_first();
  if (i == decltype(diff)::npos) return false;
  // The lists agree below i. The side lacking i continues with a larger id
  // or ends, in which case it is a prefix of the other.
  if (a.bits_.test(i)) return b.bits_.find_next(i) != decltype(diff)::npos;
  return a.bits_.find_next(i) == decltype(diff)::npos;
}

void canonicalize(OrientationSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

StarFamily::StarFamily(std::size_t system_size, std::vector<IdSet> members)
    : system_size_(system_size), members_(std::move(members)) {
  for (auto& m : members_) {
    m = make_set(std::move(m));
    if (!m.empty() && m.back() >= system_size_) fail(ErrorKind::input, "star family member outside the system");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  by_member_.assign(system_size_, {});
  for (std::size_t k = 0; k < members_.size(); ++k)
    for (Id i : members_[k]) by_member_[i].push_back(static_cast<std::uint32_t>(k));
}

bool StarFamily::contains(const IdSet& set) const {
  return std::binary_search(members_.begin(), members_.end(), set);
}

StarFamily StarFamily::united(const std::vector<IdSet>& extra) const {
  auto all = members_;
  all.insert(all.end(), extra.begin(), extra.end());
  return StarFamily(system_size_, std::move(all));
}

bool is_star(const SeparationSystem& S, const IdSet& set) {
  for (Id r : set)
    if (S.degenerate(r)) return false;
  for (Id r : set)
    for (Id s : set)
      if (r != s && !S.leq(r, S.inv(s))) return false;
  return true;
}

bool is_tight(const SeparationSystem& S, const IdSet& set) {
  for (Id r : set)
    if (!S.degenerate(r) && set_contains(set, S.inv(r))) return false;
  return true;
}

bool is_orientation(const SeparationSystem& S, const Orientation& O) {
  if (O.system_size() != S.size()) return false;
  for (Id i = 0; i < S.size(); ++i) {
    if (S.degenerate(i)) {
      if (!O.contains(i)) return false;
    } else if (O.contains(i) == O.contains(S.inv(i))) {
      return false;
    }
  }
  return true;
}

std::optional<IdPair> find_inconsistency(const SeparationSystem& S, const Orientation& O) {
  auto ids = O.ids();
  for (Id a : ids)
    for (Id s : ids) {
      Id r = S.inv(a);
      if (S.rep(r) != S.rep(s) && S.lt(r, s)) return IdPair{a, s};
    }
  return std::nullopt;
}

bool is_consistent(const SeparationSystem& S, const IdSet& O) {
  Orientation o(S.size(), O);
  return !find_inconsistency(S, o);
}

std::optional<IdPair> find_profile_violation(const SeparationSystem& S, const Orientation& O) {
  if (auto bad = find_inconsistency(S, O)) return bad;
  auto ids = O.ids();
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = a; b < ids.size(); ++b) {
      auto j = S.join(ids[a], ids[b]);
      if (j && O.contains(S.inv(*j))) return IdPair{ids[a], ids[b]};
    }
  return std::nullopt;
}

bool is_regular(const SeparationSystem& S, const Orientation& O) {
  for (Id i : O.ids())
    if (S.cosmall(i)) return false;
  return true;
}

std::optional<std::size_t> forbidden_member(const Orientation& O, const StarFamily& F) {
  for (std::size_t k = 0; k < F.size(); ++k)
    if (O.contains_all(F.members()[k])) return k;
  return std::nullopt;
}

bool distinguishes(const SeparationSystem& S, Id s, const Orientation& a, const Orientation& b) {
  if (s >= S.size()) fail(ErrorKind::input, "unknown separation id");
  if (S.degenerate(s)) fail(ErrorKind::input, "a degenerate separation distinguishes nothing");
  return a.contains(s) != b.contains(s);
}

std::optional<std::pair<std::size_t, std::size_t>> undistinguished_pair(const SeparationSystem& S, const IdSet& N,
                                                                        const OrientationSet& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      bool split = std::any_of(N.begin(), N.end(), [&](Id s) {
        return !S.degenerate(s) && set[a].contains(s) != set[b].contains(s);
      });
      if (!split) return std::pair{a, b};
    }
  return std::nullopt;
}

bool distinguishes_efficiently(const SeparationSystem& S, Id s, const Orientation& a, const Orientation& b) {
  if (!S.has_order()) fail(ErrorKind::unsupported, "efficiency needs an order function");
  if (!distinguishes(S, s, a, b)) return false;
  Order k = S.order(s);
  for (Id t : S.unoriented())
    if (!S.degenerate(t) && S.order(t) < k && a.contains(t) != b.contains(t)) return false;
  return true;
}

bool essential_star(const IdSet& star, const OrientationSet& set) {
  return std::any_of(set.begin(), set.end(), [&](const Orientation& O) { return O.contains_all(star); });
}

IdSet maximal_in(const SeparationSystem& S, const Orientation& O) {
  auto ids = O.ids();
  IdSet out;
  for (Id x : ids)
    if (std::none_of(ids.begin(), ids.end(), [&](Id y) { return S.lt(x, y); })) out.push_back(x);
  return out;
}

std::vector<IdSet> standard_singletons(const SeparationSystem& S) {
  std::vector<IdSet> out;
  for (Id r = 0; r < S.size(); ++r)
    if (S.trivial(r)) out.push_back({S.inv(r)});
  return out;
}

std::vector<IdSet> regularity_singletons(const SeparationSystem& S) {
  std::vector<IdSet> out;
  for (Id r = 0; r < S.size(); ++r)
    if (!S.degenerate(r) && S.small(r)) out.push_back({S.inv(r)});
  return out;
}

StarFamily profile_family(const SeparationSystem& S) {
  std::vector<IdSet> sets;
  for (Id r = 0; r < S.size(); ++r)
    for (Id s = r; s < S.size(); ++s)
      if (auto j = S.join(r, s)) sets.push_back(make_set({r, s, S.inv(*j)}));
  return StarFamily(S.size(), std::move(sets));
}

StarFamilyReport check_star_family(const SeparationSystem& S, const StarFamily& F,
                                   std::optional<bool> closed_under_shifting, const EnumLimits& limits) {
  if (F.system_size() != S.size()) fail(ErrorKind::input, "star family belongs to another system");
  StarFamilyReport rep;
  rep.standard = true;
  for (Id r = 0; r < S.size() && rep.standard; ++r)
    if (S.trivial(r) && !F.contains({S.inv(r)})) {
      rep.standard = false;
      rep.missing_standard = r;
    }
  rep.small_singletons = true;
  for (Id r = 0; r < S.size() && rep.small_singletons; ++r)
    if (!S.degenerate(r) && S.small(r) && !F.contains({S.inv(r)})) {
      rep.small_singletons = false;
      rep.missing_singleton = r;
    }
  auto tangles = enumerate_tangles(S, F, limits);
  rep.tangles = tangles.size();
  rep.profile_respecting = true;
  for (std::size_t k = 0; k < tangles.size(); ++k)
    if (!is_profile(S, tangles[k])) {
      rep.profile_respecting = false;
      rep.non_profile = k;
      break;
    }
  rep.closed_under_shifting = closed_under_shifting;
  rep.friendly = rep.standard && rep.small_singletons && rep.profile_respecting && closed_under_shifting.value_or(false);
  return rep;
}

}  // namespace tangles
