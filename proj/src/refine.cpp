#include "tangles/refine.hpp"

#include "tangles/core.hpp"
#include "tangles/error.hpp"

#include <algorithm>

namespace tangles {

std::optional<Id> closeness_violation(const SeparationSystem& S, Id s, const Orientation& P) {
  if (!P.contains(s)) return s;
  for (Id r : P.ids())
    if (!S.meet(s, r)) return r;
  return std::nullopt;
}

bool distinguishes_well(const SeparationSystem& S, Id s, const Orientation& P, const Orientation& Q) {
  Id t = S.inv(s);
  return (closely_related(S, s, P) && closely_related(S, t, Q)) || (closely_related(S, t, P) && closely_related(S, s, Q));
}

bool good(const SeparationSystem& S, Id s, const OrientationSet& profiles) {
  Id t = S.inv(s);
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    if (!closely_related(S, s, profiles[a])) continue;
    for (std::size_t b = 0; b < profiles.size(); ++b)
      if (b != a && closely_related(S, t, profiles[b])) return true;
  }
  return false;
}

Id guarded_inf(const SeparationSystem& S, Id s, const std::vector<CloseWitness>& M, const Orientation* close_to) {
  if (s >= S.size()) fail(ErrorKind::input, "unknown separation id");
  std::vector<const CloseWitness*> order;
  for (const auto& w : M) {
    if (w.separation >= S.size()) fail(ErrorKind::input, "unknown separation id");
    if (!closely_related(S, w.separation, w.profile))
      fail(ErrorKind::input, S.describe(w.separation) + " is not closely related to its witness profile");
    if (!w.profile.contains(s))
      fail(ErrorKind::input, "witness profile of " + S.describe(w.separation) + " does not contain " + S.describe(s));
    order.push_back(&w);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const CloseWitness* a, const CloseWitness* b) { return a->separation < b->separation; });
  Id acc = s;
  for (const auto* w : order) {
    auto m = S.meet(acc, w->separation);
    if (!m) fail(ErrorKind::integrity, "infimum leaves the system at " + S.describe(w->separation));
    acc = *m;
  }
  if (close_to && closely_related(S, s, *close_to) && !closely_related(S, acc, *close_to))
    fail(ErrorKind::integrity, "infimum " + S.describe(acc) + " is not closely related to the profile");
  return acc;
}

std::optional<std::size_t> find_close_profile(const SeparationSystem& S, Id s, const OrientationSet& set) {
  for (std::size_t k = 0; k < set.size(); ++k)
    if (closely_related(S, s, set[k])) return k;
  return std::nullopt;
}

namespace {

std::size_t present_count(const SeparationSystem& S, const STree& T, const IdSet& sigma) {
  auto leaves = leaf_separations(S, T);
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](Id s) { return set_contains(leaves, s); }));
}

STree reduce_keeping(const SeparationSystem& S, const STree& T, const IdSet& keep, Id must) {
  try {
    return irredundant_reduction(S, T, keep);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::domain) throw;
  }
  return irredundant_reduction(S, T, {must});
}

}  // namespace

STree refine_star(const SeparationSystem& S, const IdSet& sigma_in, const StarFamily& F,
                  const std::vector<CloseWitness>& witnesses, const RefineOptions& options) {
  if (F.system_size() != S.size()) fail(ErrorKind::input, "star family belongs to another system");
  IdSet sigma = make_set(sigma_in);
  if (sigma.empty()) fail(ErrorKind::input, "refine_star needs a non-empty star");
  if (!is_star(S, sigma)) fail(ErrorKind::input, "refine_star: input is not a star");

  OrientationSet own;
  const OrientationSet* tangles = options.tangles;
  if (!tangles) {
    own = enumerate_tangles(S, F, options.limits);
    tangles = &own;
  }
  if (essential_star(sigma, *tangles)) fail(ErrorKind::domain, "refine_star: the star is home to an F-tangle");

  // P_i with s̄_i closely related to P_i.
  std::vector<Orientation> home;
  if (!witnesses.empty()) {
    if (witnesses.size() != sigma.size()) fail(ErrorKind::input, "refine_star: one witness per member required");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      const auto& w = witnesses[i];
      if (w.separation != S.inv(sigma[i]) || !closely_related(S, w.separation, w.profile))
        fail(ErrorKind::input, "refine_star: invalid witness for " + S.describe(sigma[i]));
      home.push_back(w.profile);
    }
  } else {
    for (Id s : sigma) {
      auto k = find_close_profile(S, S.inv(s), *tangles);
      if (!k) fail(ErrorKind::domain, "no F-tangle is closely related to the inverse of " + S.describe(s));
      home.push_back((*tangles)[*k]);
    }
  }

  std::vector<IdSet> extra;
  for (Id x = 0; x < S.size(); ++x)
    for (Id s : sigma)
      if (S.leq(S.inv(s), x)) {
        extra.push_back({x});
        break;
      }
  StarFamily Fbar = F.united(extra);

  DualityOptions dopt;
  dopt.check_closure = false;
  dopt.limits = options.limits;
  dopt.max_tree_vertices = options.max_tree_vertices;
  auto decided = duality_decide(S, Fbar, dopt);
  if (!decided.tree) fail(ErrorKind::integrity, "refine_star: an extended-family tangle exists");
  STree T = std::move(*decided.tree);

  for (std::size_t round = 0; round <= sigma.size(); ++round) {
    std::size_t before = present_count(S, T, sigma);
    if (before == sigma.size()) break;
    auto leaves = leaf_separations(S, T);
    std::size_t i = 0;
    while (set_contains(leaves, sigma[i])) ++i;

    // The tangle P_i lives at a leaf whose star {y} has y ≥ s̄_i.
    auto stars = stars_of(S, T);
    auto adj = adjacency(S, T);
    std::optional<Id> y;
    for (std::size_t t = 0; t < T.vertices && !y; ++t)
      if (home[i].contains_all(stars[t])) {
        if (adj[t].size() > 1 || stars[t].size() != 1 || !S.leq(S.inv(sigma[i]), stars[t][0]))
          fail(ErrorKind::integrity, "refine_star: tangle lives at an unexpected node");
        y = stars[t][0];
      }
    if (!y) fail(ErrorKind::integrity, "refine_star: tangle lives at no node of the tree");
    Id r = S.inv(*y);

    IdSet keep{r};
    for (Id s : sigma)
      if (set_contains(leaves, s)) keep.push_back(s);
    T = reduce_keeping(S, T, make_set(keep), r);
    T = shift_stree(S, T, r, sigma[i], &Fbar);
    if (present_count(S, T, sigma) <= before) fail(ErrorKind::integrity, "refine_star: shift made no progress");
  }
  if (present_count(S, T, sigma) != sigma.size()) fail(ErrorKind::integrity, "refine_star: members still missing");

  T = irredundant_reduction(S, T, sigma);
  std::vector<IdSet> singles;
  for (Id s : sigma) singles.push_back({S.inv(s)});
  StarFamily Fout = F.united(singles);
  auto rep = stree_validate(S, T, &Fout);
  if (!rep.ok()) fail(ErrorKind::integrity, "refined tree fails validation: " + rep.problem);
  return T;
}

RefinedTreeSet refine_treeset(const SeparationSystem& S, const IdSet& N_in, const StarFamily& F,
                              const RefineOptions& options) {
  if (F.system_size() != S.size()) fail(ErrorKind::input, "star family belongs to another system");
  IdSet Ntilde = unoriented_set(S, N_in);
  if (!is_nested_set(S, Ntilde)) fail(ErrorKind::domain, "refine_treeset: input set is not nested");

  OrientationSet own;
  const OrientationSet* tangles = options.tangles;
  if (!tangles) {
    own = enumerate_tangles(S, F, options.limits);
    tangles = &own;
  }
  if (auto pair = undistinguished_pair(S, Ntilde, *tangles))
    fail(ErrorKind::domain, "refine_treeset: input set does not distinguish tangles " + std::to_string(pair->first) +
                                " and " + std::to_string(pair->second));

  RefineOptions inner = options;
  inner.tangles = tangles;
  RefinedTreeSet out;
  IdSet all = Ntilde;
  auto classes = essential_nodes(S, Ntilde, *tangles, options.limits);
  for (const auto& sigma : classes.inessential) {
    STree T;
    if (sigma.empty()) {
      // No tangle at all: the duality tree over F already does the job.
      DualityOptions dopt;
      dopt.check_closure = false;
      dopt.limits = options.limits;
      dopt.max_tree_vertices = options.max_tree_vertices;
      auto decided = duality_decide(S, F, dopt);
      if (!decided.tree) fail(ErrorKind::integrity, "refine_treeset: empty inessential node but a tangle exists");
      T = std::move(*decided.tree);
    } else {
      for (Id s : sigma)
        if (!find_close_profile(S, S.inv(s), *tangles))
          fail(ErrorKind::domain, "refine_treeset: the inverse of " + S.describe(s) +
                                      " is not closely related to any F-tangle");
      T = refine_star(S, sigma, F, {}, inner);
    }
    for (Id x : stree_image(S, T))
      if (!S.degenerate(x) && !S.trivial(x) && !S.trivial(S.inv(x))) all.push_back(x);
    out.inessential.push_back(sigma);
    out.trees.push_back(std::move(T));
  }
  out.N = make_set(std::move(all));
  if (!is_nested_set(S, out.N)) fail(ErrorKind::integrity, "refined set is not nested");
  out.nodes = nodes_of(S, out.N, options.limits);
  // Trivial tree labels are dropped from N, so a tree star in F may show
  // up as a node without its trivial members.
  std::vector<IdSet> padded_free;
  for (const auto& star : F.members()) {
    IdSet rest;
    for (Id x : star)
      if (!S.trivial(x)) rest.push_back(x);
    if (rest.size() != star.size()) padded_free.push_back(std::move(rest));
  }
  std::sort(padded_free.begin(), padded_free.end());
  for (const auto& node : out.nodes) {
    bool inF = F.contains(node);
    bool padded = !inF && std::binary_search(padded_free.begin(), padded_free.end(), node);
    bool home = essential_star(node, *tangles);
    if (!inF && !padded && !home)
      fail(ErrorKind::integrity, "refined set has a node that is neither in F nor home to a tangle");
    out.node_in_F.push_back(inF || padded);
    out.node_padded.push_back(padded);
    out.node_home.push_back(home);
  }
  return out;
}

}  // namespace tangles
