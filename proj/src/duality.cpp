#include "tangles/duality.hpp"

#include "tangles/core.hpp"
#include "tangles/error.hpp"
#include "tangles/parallel.hpp"

#include <algorithm>

namespace tangles {

namespace {

// Emulation without the base-separation precondition.
std::optional<Id> raw_violation(const SeparationSystem& S, Id s, Id r) {
  if (!S.leq(r, s)) return s;
  const Id rbar = S.inv(r);
  for (Id x = 0; x < S.size(); ++x)
    if (x != rbar && S.leq(r, x) && !S.join(s, x)) return x;
  return std::nullopt;
}

void require_base(const SeparationSystem& S, Id r) {
  if (r >= S.size()) fail(ErrorKind::input, "unknown separation id");
  if (S.degenerate(r)) fail(ErrorKind::input, "cannot emulate the degenerate " + S.describe(r));
  if (S.trivial(r)) fail(ErrorKind::input, "cannot emulate the trivial " + S.describe(r));
}

// Stars of F inside the shift domain (r̄ excluded) with a member ≥ r.
std::vector<std::size_t> shiftable_stars(const SeparationSystem& S, Id r, const StarFamily& F) {
  std::vector<std::size_t> out;
  const Id rbar = S.inv(r);
  for (Id x = 0; x < S.size(); ++x) {
    if (!S.leq(r, x) || x == rbar) continue;
    for (auto k : F.containing(x)) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<std::size_t> kept;
  for (auto k : out) {
    const auto& sigma = F.members()[k];
    bool inside = std::all_of(sigma.begin(), sigma.end(), [&](Id y) { return y != rbar && in_shift_domain(S, r, y); });
    if (inside) kept.push_back(k);
  }
  return kept;
}

IdSet image_of(const SeparationSystem& S, const ShiftMap& m, const IdSet& sigma) {
  IdSet img;
  for (Id y : sigma) img.push_back(shift_apply(S, m, y));
  return make_set(std::move(img));
}

std::optional<std::size_t> first_bad_star(const SeparationSystem& S, Id s, Id r, const StarFamily& F,
                                          const std::vector<std::size_t>& stars) {
  ShiftMap m{r, s};
  for (auto k : stars)
    if (!F.contains(image_of(S, m, F.members()[k]))) return k;
  return std::nullopt;
}

std::optional<ShiftWitness> violation_for_base(const SeparationSystem& S, const StarFamily& F, Id r) {
  if (S.degenerate(r) || S.trivial(r)) return std::nullopt;
  auto stars = shiftable_stars(S, r, F);
  if (stars.empty()) return std::nullopt;
  for (Id s = 0; s < S.size(); ++s) {
    if (s == r || raw_violation(S, s, r)) continue;
    if (auto k = first_bad_star(S, s, r, F, stars)) return ShiftWitness{s, r, *k};
  }
  return std::nullopt;
}

bool separable_at(const SeparationSystem& S, Id s, Id r) {
  for (Id t = 0; t < S.size(); ++t)
    if (S.leq(s, t) && S.leq(t, r) && !raw_violation(S, t, s) && !raw_violation(S, S.inv(t), S.inv(r))) return true;
  return false;
}

std::optional<IdPair> separability_for(const SeparationSystem& S, Id s) {
  for (Id r = 0; r < S.size(); ++r)
    if (S.leq(s, r) && !separable_at(S, s, r)) return IdPair{s, r};
  return std::nullopt;
}

}  // namespace

bool in_shift_domain(const SeparationSystem& S, Id r, Id x) { return S.leq(r, x) || S.leq(r, S.inv(x)); }

std::optional<Id> emulation_violation(const SeparationSystem& S, Id s, Id r) {
  require_base(S, r);
  if (s >= S.size()) fail(ErrorKind::input, "unknown separation id");
  return raw_violation(S, s, r);
}

ShiftMap make_shift(const SeparationSystem& S, Id r, Id s) {
  if (auto bad = emulation_violation(S, s, r))
    fail(ErrorKind::input, S.describe(s) + " does not emulate " + S.describe(r) + " (witness " + S.describe(*bad) + ")");
  return ShiftMap{r, s};
}

Id shift_apply(const SeparationSystem& S, const ShiftMap& m, Id x) {
  if (x >= S.size()) fail(ErrorKind::input, "unknown separation id");
  std::optional<Id> img;
  if (S.leq(m.r, x) && x != S.inv(m.r)) {
    img = S.join(x, m.s);
  } else if (S.leq(m.r, S.inv(x))) {
    auto j = S.join(S.inv(x), m.s);
    if (j) img = S.inv(*j);
  } else {
    fail(ErrorKind::input, S.describe(x) + " is outside the shift domain of " + S.describe(m.r));
  }
  if (!img) fail(ErrorKind::integrity, "shift image of " + S.describe(x) + " leaves the system");
  return *img;
}

std::optional<std::size_t> emulation_violation_for_F(const SeparationSystem& S, Id s, Id r, const StarFamily& F) {
  make_shift(S, r, s);
  return first_bad_star(S, s, r, F, shiftable_stars(S, r, F));
}

std::optional<ShiftWitness> shifting_violation(const SeparationSystem& S, const StarFamily& F) {
  if (F.system_size() != S.size()) fail(ErrorKind::input, "star family belongs to another system");
  const auto n = static_cast<std::int64_t>(S.size());
  std::vector<std::optional<ShiftWitness>> found(S.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs())
  for (std::int64_t r = 0; r < n; ++r) found[r] = violation_for_base(S, F, static_cast<Id>(r));
  for (auto& w : found)
    if (w) return w;
  return std::nullopt;
}

STree shift_stree(const SeparationSystem& S, const STree& T, Id r, Id s, const StarFamily* F) {
  auto rep = stree_validate(S, T, F);
  if (!rep.is_stree) fail(ErrorKind::input, "shift_stree: not an S-tree: " + rep.problem);
  if (!rep.tight) fail(ErrorKind::input, "shift_stree: tree is not tight");
  if (!rep.irredundant) fail(ErrorKind::input, "shift_stree: tree is not irredundant");
  if (F && !*rep.over_F) fail(ErrorKind::input, "shift_stree: tree is not over the family");
  require_base(S, r);
  if (leaf_count(S, T, r) == 0) fail(ErrorKind::input, "shift_stree: " + S.describe(r) + " is not a leaf separation");
  if (label_count(S, T, r) != 1)
    fail(ErrorKind::input, "shift_stree: " + S.describe(r) + " labels more than one edge");
  auto m = make_shift(S, r, s);
  if (F && !emulates_for_F(S, s, r, *F))
    fail(ErrorKind::input, "shift_stree: " + S.describe(s) + " does not emulate " + S.describe(r) + " for the family");

  STree out = T;
  for (auto& e : out.edges) e.label = shift_apply(S, m, e.label);

  std::optional<StarFamily> Fs;
  if (F) Fs = F->united({{S.inv(s)}});
  auto check = stree_validate(S, out, Fs ? &*Fs : nullptr);
  if (!check.is_stree || !check.over_F.value_or(true))
    fail(ErrorKind::integrity, "shifted tree fails validation: " + check.problem);
  if (leaf_count(S, out, s) != 1) fail(ErrorKind::integrity, "shifted tree lacks a unique leaf for " + S.describe(s));
  return out;
}

namespace {

STree unfold(const SeparationSystem& S, const StarFamily& F, const std::vector<std::int64_t>& via, std::size_t root,
             std::size_t cap) {
  STree T;
  T.vertices = 1;
  // (vertex, member of its star to expand)
  std::vector<std::pair<std::size_t, Id>> todo;
  for (Id y : F.members()[root]) todo.push_back({0, y});
  while (!todo.empty()) {
    auto [parent, y] = todo.back();
    todo.pop_back();
    if (T.vertices >= cap)
      fail(ErrorKind::resource, "duality tree exceeds " + std::to_string(cap) + " vertices");
    std::size_t child = T.vertices++;
    T.edges.push_back({child, parent, y});
    const Id back = S.inv(y);
    for (Id z : F.members()[static_cast<std::size_t>(via[y])])
      if (z != back) todo.push_back({child, z});
  }
  return T;
}

}  // namespace

DualityResult duality_decide(const SeparationSystem& S, const StarFamily& F, const DualityOptions& options) {
  if (F.system_size() != S.size()) fail(ErrorKind::input, "star family belongs to another system");
  if (auto bad = find_submodularity_violation(S))
    fail(ErrorKind::input, "system is not submodular at " + S.describe(bad->first) + ", " + S.describe(bad->second));
  for (const auto& sigma : F.members())
    if (!is_star(S, sigma)) fail(ErrorKind::input, "family member is not a star");
  for (Id r = 0; r < S.size(); ++r)
    if (S.trivial(r) && !F.contains({S.inv(r)}))
      fail(ErrorKind::input, "family is not standard: missing the co-trivial " + S.describe(S.inv(r)));
  if (options.check_closure)
    if (auto w = shifting_violation(S, F))
      fail(ErrorKind::input, "family is not closed under shifting: " + S.describe(w->s) + " over " + S.describe(w->r));

  DualityResult result;
  auto tangles = enumerate_tangles(S, F, options.limits);
  if (!tangles.empty()) {
    if (!is_f_tangle(S, tangles.front(), F)) fail(ErrorKind::integrity, "enumerated tangle fails verification");
    result.tangle = tangles.front();
    return result;
  }

  // Least fixed point: x is closed once some tight σ ∋ x̄ has all its other
  // members closed. A tight σ with all members closed is the root.
  std::vector<std::size_t> tight;
  for (std::size_t k = 0; k < F.size(); ++k)
    if (is_tight(S, F.members()[k])) tight.push_back(k);
  std::vector<std::int64_t> via(S.size(), -1);
  std::optional<std::size_t> root;
  while (!root) {
    for (auto k : tight) {
      const auto& sigma = F.members()[k];
      if (std::all_of(sigma.begin(), sigma.end(), [&](Id y) { return via[y] >= 0; })) {
        root = k;
        break;
      }
    }
    if (root) break;
    std::vector<std::pair<Id, std::size_t>> fresh;
    for (auto k : tight) {
      const auto& sigma = F.members()[k];
      std::size_t open = 0;
      Id last = 0;
      for (Id y : sigma)
        if (via[y] < 0) {
          ++open;
          last = y;
        }
      if (open == 1) fresh.push_back({S.inv(last), k});
    }
    bool changed = false;
    for (auto [x, k] : fresh)
      if (via[x] < 0) {
        via[x] = static_cast<std::int64_t>(k);
        changed = true;
      }
    if (!changed) break;
  }
  if (!root)
    fail(ErrorKind::integrity, "neither a tangle nor a tree over the family exists; is it closed under shifting?");
  STree T = unfold(S, F, via, *root, options.max_tree_vertices);
  auto rep = stree_validate(S, T, &F);
  if (!rep.ok()) fail(ErrorKind::integrity, "duality tree fails validation: " + rep.problem);
  result.tree = std::move(T);
  return result;
}

std::optional<IdPair> separability_violation(const SeparationSystem& S) {
  const auto n = static_cast<std::int64_t>(S.size());
  std::vector<std::optional<IdPair>> found(S.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs())
  for (std::int64_t s = 0; s < n; ++s) found[s] = separability_for(S, static_cast<Id>(s));
  for (auto& w : found)
    if (w) return w;
  return std::nullopt;
}

namespace reference {

std::optional<ShiftWitness> shifting_violation(const SeparationSystem& S, const StarFamily& F) {
  for (Id r = 0; r < S.size(); ++r) {
    if (S.degenerate(r) || S.trivial(r)) continue;
    for (Id s = 0; s < S.size(); ++s) {
      if (s == r || raw_violation(S, s, r)) continue;
      ShiftMap m{r, s};
      for (std::size_t k = 0; k < F.size(); ++k) {
        const auto& sigma = F.members()[k];
        bool inside = std::all_of(sigma.begin(), sigma.end(),
                                  [&](Id y) { return y != S.inv(r) && in_shift_domain(S, r, y); });
        bool above = std::any_of(sigma.begin(), sigma.end(), [&](Id y) { return S.leq(r, y); });
        if (inside && above && !F.contains(image_of(S, m, sigma))) return ShiftWitness{s, r, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<IdPair> separability_violation(const SeparationSystem& S) {
  for (Id s = 0; s < S.size(); ++s)
    for (Id r = 0; r < S.size(); ++r)
      if (S.leq(s, r) && !separable_at(S, s, r)) return IdPair{s, r};
  return std::nullopt;
}

}  // namespace reference

}  // namespace tangles
