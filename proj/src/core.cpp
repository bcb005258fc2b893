#include "tangles/core.hpp"

#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

#include <algorithm>
#include <limits>

namespace tangles {

namespace {

void require(const Universe& u, Sep s) {
  if (!u.valid(s.code)) fail(ErrorKind::input, "unknown element code " + std::to_string(s.code));
}

constexpr std::uint64_t no_pair = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pack(Id a, Id b) { return (std::uint64_t{a} << 32) | b; }
IdPair unpack(std::uint64_t p) { return {static_cast<Id>(p >> 32), static_cast<Id>(p & 0xffffffffU)}; }

bool submodular_pair_ok(const SeparationSystem& S, Id i, Id j) {
  return S.join(i, j).has_value() || S.meet(i, j).has_value();
}

bool order_pair_ok(const SeparationSystem& S, Id i, Id j) {
  const Universe& u = S.universe();
  Code a = S.code(i), b = S.code(j);
  return u.order(u.join(a, b)) + u.order(u.meet(a, b)) <= u.order(a) + u.order(b);
}

// First failing (i, j) with i <= j in row-major order. Rows are scanned in
// parallel and the minimum packed pair wins, so the answer is the serial one.
template <class Ok>
std::optional<IdPair> parallel_pair_scan(const SeparationSystem& S, Ok ok) {
  const auto n = static_cast<std::int64_t>(S.size());
  std::uint64_t best = no_pair;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) {
    if (pack(static_cast<Id>(i), 0) > best) continue;
    for (std::int64_t j = i; j < n; ++j)
      if (!ok(static_cast<Id>(i), static_cast<Id>(j))) {
        best = std::min(best, pack(static_cast<Id>(i), static_cast<Id>(j)));
        break;
      }
  }
  if (best == no_pair) return std::nullopt;
  return unpack(best);
}

template <class Ok>
std::optional<IdPair> serial_pair_scan(const SeparationSystem& S, Ok ok) {
  for (Id i = 0; i < S.size(); ++i)
    for (Id j = i; j < S.size(); ++j)
      if (!ok(i, j)) return IdPair{i, j};
  return std::nullopt;
}

}  // namespace

Sep invert(const Universe& u, Sep s) {
  require(u, s);
  return {u.invert(s.code)};
}

bool leq(const Universe& u, Sep r, Sep s) {
  require(u, r);
  require(u, s);
  return u.leq(r.code, s.code);
}

Sep meet(const Universe& u, Sep r, Sep s) {
  require(u, r);
  require(u, s);
  return {u.meet(r.code, s.code)};
}

Sep join(const Universe& u, Sep r, Sep s) {
  require(u, r);
  require(u, s);
  return {u.join(r.code, s.code)};
}

Sep unoriented_key(const Universe& u, Sep s) {
  require(u, s);
  return {std::min(s.code, u.invert(s.code))};
}

std::vector<Sep> corner_separations(const Universe& u, Sep r, Sep s) {
  Sep rk = unoriented_key(u, r);
  Sep sk = unoriented_key(u, s);
  Sep rb = invert(u, rk);
  std::vector<Sep> out{
      unoriented_key(u, join(u, rk, sk)),
      unoriented_key(u, meet(u, rk, sk)),
      unoriented_key(u, join(u, rb, sk)),
      unoriented_key(u, meet(u, rb, sk)),
  };
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool nested(const Universe& u, Sep r, Sep s) {
  Sep rb = invert(u, r), sb = invert(u, s);
  return leq(u, r, s) || leq(u, r, sb) || leq(u, rb, s) || leq(u, rb, sb);
}

bool nested(const SeparationSystem& S, Id r, Id s) {
  Id rb = S.inv(r), sb = S.inv(s);
  return S.leq(r, s) || S.leq(r, sb) || S.leq(rb, s) || S.leq(rb, sb);
}

bool nested_with_all(const SeparationSystem& S, Id r, const IdSet& set) {
  return std::all_of(set.begin(), set.end(), [&](Id m) { return nested(S, r, m); });
}

bool is_nested_set(const SeparationSystem& S, const IdSet& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (!nested(S, set[a], set[b])) return false;
  return true;
}

SepFlags classify(const SeparationSystem& S, Id s) {
  if (s >= S.size()) fail(ErrorKind::input, "unknown separation id");
  SepFlags f;
  f.degenerate = S.degenerate(s);
  f.small = S.small(s);
  f.cosmall = S.cosmall(s);
  f.trivial_witness = S.trivial_witness(s);
  f.trivial = f.trivial_witness.has_value();
  return f;
}

std::optional<IdPair> find_submodularity_violation(const SeparationSystem& S) {
  return parallel_pair_scan(S, [&](Id i, Id j) { return submodular_pair_ok(S, i, j); });
}

std::optional<IdPair> find_order_submodularity_violation(const SeparationSystem& S) {
  if (!S.has_order()) fail(ErrorKind::unsupported, "universe has no order function");
  return parallel_pair_scan(S, [&](Id i, Id j) { return order_pair_ok(S, i, j); });
}

std::optional<SepPair> check_order_submodular(const Universe& u) {
  if (!u.has_order()) fail(ErrorKind::unsupported, "universe has no order function");
  auto elems = u.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      Code a = elems[i], b = elems[j];
      if (u.order(u.join(a, b)) + u.order(u.meet(a, b)) > u.order(a) + u.order(b))
        return SepPair{Sep{a}, Sep{b}};
    }
  return std::nullopt;
}

SeparationSystem induced_Sk(const UniversePtr& u, std::int64_t k) {
  if (!u->has_order()) fail(ErrorKind::unsupported, "universe has no order function");
  if (k <= 0) fail(ErrorKind::input, "k must be positive");
  return SeparationSystem(u, u->elements_below(k));
}

IdSet nested_members(const SeparationSystem& S, const IdSet& M) {
  for (Id m : M)
    if (m >= S.size()) fail(ErrorKind::input, "restriction set is not contained in the system");
  IdSet keep;
  for (Id i = 0; i < S.size(); ++i)
    if (nested_with_all(S, i, M)) keep.push_back(i);
  return keep;
}

SeparationSystem restrict_nested(const SeparationSystem& S, const IdSet& M) {
  return S.subsystem(nested_members(S, M));
}

namespace reference {

std::optional<IdPair> find_submodularity_violation(const SeparationSystem& S) {
  return serial_pair_scan(S, [&](Id i, Id j) { return submodular_pair_ok(S, i, j); });
}

std::optional<IdPair> find_order_submodularity_violation(const SeparationSystem& S) {
  if (!S.has_order()) fail(ErrorKind::unsupported, "universe has no order function");
  return serial_pair_scan(S, [&](Id i, Id j) { return order_pair_ok(S, i, j); });
}

}  // namespace reference

}  // namespace tangles
