#include "tangles/trees.hpp"

#include "tangles/core.hpp"
#include "tangles/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tangles {

IdSet unoriented_set(const SeparationSystem& S, const IdSet& members) {
  IdSet out;
  out.reserve(members.size());
  for (Id i : members) {
    if (i >= S.size()) fail(ErrorKind::input, "nested set member outside the system");
    out.push_back(S.rep(i));
  }
  return make_set(std::move(out));
}

IdSet oriented_set(const SeparationSystem& S, const IdSet& N) {
  IdSet out;
  for (Id i : N) {
    out.push_back(i);
    out.push_back(S.inv(i));
  }
  return make_set(std::move(out));
}

bool is_tree_set(const SeparationSystem& S, const IdSet& N) {
  if (!is_nested_set(S, N)) return false;
  IdSet all = oriented_set(S, N);
  for (Id x : all) {
    if (S.degenerate(x)) return false;
    for (Id r : all)
      if (S.rep(r) != S.rep(x) && S.lt(x, r) && S.lt(x, S.inv(r))) return false;
  }
  return true;
}

bool is_regular_tree_set(const SeparationSystem& S, const IdSet& N) {
  if (!is_tree_set(S, N)) return false;
  for (Id x : oriented_set(S, N))
    if (S.small(x)) return false;
  return true;
}

std::vector<IdSet> nodes_of(const SeparationSystem& S, const IdSet& N, const EnumLimits& limits) {
  std::vector<IdSet> out;
  for (const auto& O : enumerate_consistent(S, N, limits)) out.push_back(maximal_in(S, O));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IdSet lives_at(const SeparationSystem& S, const Orientation& O, const IdSet& N) {
  if (auto bad = find_inconsistency(S, O))
    fail(ErrorKind::input, "orientation is inconsistent at " + S.describe(bad->first) + ", " + S.describe(bad->second));
  Orientation part(S.size());
  for (Id x : oriented_set(S, N))
    if (O.contains(x)) part.insert(x);
  IdSet home = maximal_in(S, part);
  if (!is_regular_tree_set(S, N)) {
    std::size_t homes = 0;
    for (const auto& node : nodes_of(S, N))
      if (O.contains_all(node)) ++homes;
    if (homes != 1)
      fail(ErrorKind::domain, "orientation lives at " + std::to_string(homes) + " nodes of a non-regular nested set");
  }
  return home;
}

NodeClasses essential_nodes(const SeparationSystem& S, const IdSet& N, const OrientationSet& set,
                            const EnumLimits& limits) {
  NodeClasses out;
  for (auto& node : nodes_of(S, N, limits)) {
    if (essential_star(node, set))
      out.essential.push_back(std::move(node));
    else
      out.inessential.push_back(std::move(node));
  }
  return out;
}

std::vector<std::vector<std::pair<std::size_t, Id>>> adjacency(const SeparationSystem& S, const STree& T) {
  std::vector<std::vector<std::pair<std::size_t, Id>>> adj(T.vertices);
  for (const auto& e : T.edges) {
    adj[e.from].push_back({e.to, e.label});
    adj[e.to].push_back({e.from, S.inv(e.label)});
  }
  return adj;
}

std::vector<IdSet> stars_of(const SeparationSystem& S, const STree& T) {
  std::vector<IdSet> stars(T.vertices);
  for (const auto& e : T.edges) {
    stars[e.to].push_back(e.label);
    stars[e.from].push_back(S.inv(e.label));
  }
  for (auto& s : stars) s = make_set(std::move(s));
  return stars;
}

IdSet leaf_separations(const SeparationSystem& S, const STree& T) {
  IdSet out;
  auto adj = adjacency(S, T);
  for (std::size_t x = 0; x < T.vertices; ++x)
    if (adj[x].size() == 1) out.push_back(adj[x][0].second);
  return make_set(std::move(out));
}

std::size_t leaf_count(const SeparationSystem& S, const STree& T, Id label) {
  std::size_t n = 0;
  auto adj = adjacency(S, T);
  for (std::size_t x = 0; x < T.vertices; ++x)
    if (adj[x].size() == 1 && adj[x][0].second == label) ++n;
  return n;
}

std::size_t label_count(const SeparationSystem& S, const STree& T, Id label) {
  std::size_t n = 0;
  for (const auto& e : T.edges) n += (e.label == label) + (S.inv(e.label) == label);
  return n;
}

namespace {

bool connected_tree(const STree& T, const std::vector<std::vector<std::pair<std::size_t, Id>>>& adj) {
  if (T.vertices == 0 || T.edges.size() + 1 != T.vertices) return false;
  std::vector<char> seen(T.vertices, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [w, l] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == T.vertices;
}

}  // namespace

STreeReport stree_validate(const SeparationSystem& S, const STree& T, const StarFamily* F) {
  STreeReport rep;
  auto note = [&](const std::string& what) {
    if (rep.problem.empty()) rep.problem = what;
  };
  for (const auto& e : T.edges)
    if (e.from >= T.vertices || e.to >= T.vertices || e.label >= S.size() || e.from == e.to) {
      note("malformed edge");
      return rep;
    }
  auto adj = adjacency(S, T);
  rep.is_stree = connected_tree(T, adj);
  if (!rep.is_stree) {
    note("not a tree");
    return rep;
  }
  auto stars = stars_of(S, T);
  if (F) {
    rep.over_F = true;
    for (std::size_t t = 0; t < T.vertices && *rep.over_F; ++t)
      if (!F->contains(stars[t])) {
        rep.over_F = false;
        note("star at vertex " + std::to_string(t) + " is not in the family");
      }
  }
  rep.irredundant = true;
  for (std::size_t t = 0; t < T.vertices && rep.irredundant; ++t) {
    IdSet out;
    for (auto [w, l] : adj[t]) out.push_back(l);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      rep.irredundant = false;
      note("vertex " + std::to_string(t) + " is redundant");
    }
  }
  rep.tight = true;
  for (std::size_t t = 0; t < T.vertices && rep.tight; ++t)
    if (!is_tight(S, stars[t])) {
      rep.tight = false;
      note("star at vertex " + std::to_string(t) + " is not tight");
    }

  // The tree order is generated by (a, b) < (b, c) for c ≠ a.
  rep.order_preserving = true;
  for (std::size_t b = 0; b < T.vertices && rep.order_preserving; ++b)
    for (auto [a, out_ba] : adj[b])
      for (auto [c, out_bc] : adj[b])
        if (a != c && !S.leq(S.inv(out_ba), out_bc)) {
          rep.order_preserving = false;
          note("labels around vertex " + std::to_string(b) + " break the tree order");
          break;
        }
  return rep;
}

STree treeset_to_stree(const SeparationSystem& S, const IdSet& N, const EnumLimits& limits) {
  IdSet members = unoriented_set(S, N);
  if (!is_regular_tree_set(S, members)) fail(ErrorKind::input, "nested set is not a regular tree set");
  auto nodes = nodes_of(S, members, limits);
  STree T;
  T.vertices = nodes.size();
  auto home = [&](Id x) {
    std::size_t found = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (set_contains(nodes[k], x)) {
        if (found != nodes.size()) fail(ErrorKind::integrity, "separation lies in two nodes");
        found = k;
      }
    if (found == nodes.size()) fail(ErrorKind::integrity, "separation lies in no node");
    return found;
  };
  for (Id s : members) T.edges.push_back({home(S.inv(s)), home(s), s});
  return T;
}

IdSet stree_image(const SeparationSystem& S, const STree& T) {
  IdSet out;
  for (const auto& e : T.edges) out.push_back(S.rep(e.label));
  return make_set(std::move(out));
}

IdSet stree_to_treeset(const SeparationSystem& S, const STree& T) {
  for (std::size_t k = 0; k < T.edges.size(); ++k) {
    Id l = T.edges[k].label;
    if (S.degenerate(l)) fail(ErrorKind::domain, "edge " + std::to_string(k) + " has a degenerate label");
    if (S.trivial(l) || S.trivial(S.inv(l)))
      fail(ErrorKind::domain, "edge " + std::to_string(k) + " has a trivial label " + S.describe(l));
  }
  return stree_image(S, T);
}

namespace {

// Mutable tree with vertex deletion, rebuilt into an STree at the end.
struct WorkTree {
  const SeparationSystem& S;
  std::vector<std::vector<std::pair<std::size_t, Id>>> adj;  // (neighbour, α(v, neighbour))
  std::vector<char> alive;

  WorkTree(const SeparationSystem& s, const STree& T) : S(s), adj(adjacency(s, T)), alive(T.vertices, 1) {}

  void unlink(std::size_t a, std::size_t b) {
    auto drop = [](auto& list, std::size_t w) {
      list.erase(std::remove_if(list.begin(), list.end(), [&](const auto& p) { return p.first == w; }), list.end());
    };
    drop(adj[a], b);
    drop(adj[b], a);
  }

  // Vertices on b's side of the edge {a, b}.
  std::vector<std::size_t> branch(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out{b}, stack{b};
    std::vector<char> seen(adj.size(), 0);
    seen[a] = seen[b] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto [w, l] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          out.push_back(w);
          stack.push_back(w);
        }
    }
    return out;
  }

  std::size_t keep_leaves(const std::vector<std::size_t>& part, const IdSet& keep) const {
    std::size_t n = 0;
    for (auto v : part)
      if (adj[v].size() == 1 && set_contains(keep, adj[v][0].second)) ++n;
    return n;
  }

  void remove_branch(std::size_t a, std::size_t b) {
    auto part = branch(a, b);
    unlink(a, b);
    for (auto v : part) {
      alive[v] = 0;
      adj[v].clear();
    }
  }

  bool fix_redundant(const IdSet& keep) {
    for (std::size_t t = 0; t < adj.size(); ++t) {
      if (!alive[t]) continue;
      std::map<Id, std::size_t> first;
      for (auto [w, l] : adj[t]) {
        auto [it, fresh] = first.emplace(l, w);
        if (fresh) continue;
        std::size_t u = it->second;
        std::size_t ku = keep_leaves(branch(t, u), keep), kw = keep_leaves(branch(t, w), keep);
        if (ku < kw || (ku == kw && u > w)) std::swap(u, w);
        remove_branch(t, w);
        return true;
      }
    }
    return false;
  }

  bool fix_loose(const IdSet&) {
    for (std::size_t t = 0; t < adj.size(); ++t) {
      if (!alive[t]) continue;
      // Incoming label at t from w is inv(α(t, w)).
      for (auto [w1, l1] : adj[t]) {
        Id in1 = S.inv(l1);
        if (S.degenerate(in1)) continue;
        for (auto [w2, l2] : adj[t]) {
          if (w2 == w1 || S.inv(l2) != S.inv(in1)) continue;
          // α(w1, t) = x and α(w2, t) = x̄: join w1 and w2 directly.
          std::vector<std::size_t> others;
          for (auto [w, l] : adj[t])
            if (w != w1 && w != w2) others.push_back(w);
          for (auto w : others) remove_branch(t, w);
          unlink(t, w1);
          unlink(t, w2);
          alive[t] = 0;
          adj[w1].push_back({w2, S.inv(in1)});
          adj[w2].push_back({w1, in1});
          return true;
        }
      }
    }
    return false;
  }

  STree build() const {
    std::vector<std::size_t> index(adj.size(), adj.size());
    STree T;
    T.vertices = 0;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (alive[v]) index[v] = T.vertices++;
    for (std::size_t v = 0; v < adj.size(); ++v)
      for (auto [w, l] : adj[v])
        if (alive[v] && v < w) T.edges.push_back({index[v], index[w], l});
    return T;
  }
};

}  // namespace

STree irredundant_reduction(const SeparationSystem& S, const STree& T, const IdSet& keep) {
  auto rep = stree_validate(S, T);
  if (!rep.is_stree) fail(ErrorKind::input, "irredundant_reduction needs an S-tree: " + rep.problem);
  for (Id r : keep)
    if (S.degenerate(r) || S.trivial(r)) fail(ErrorKind::input, "kept leaf separations must be neither trivial nor degenerate");
  WorkTree w(S, T);
  while (w.fix_redundant(keep) || w.fix_loose(keep)) {
  }
  STree out = w.build();
  for (Id r : keep)
    if (leaf_count(S, out, r) != 1 || label_count(S, out, r) != 1)
      fail(ErrorKind::domain, "cannot keep " + S.describe(r) + " as a unique leaf separation");
  return out;
}

STree canonical_form(const SeparationSystem& S, const STree& T) {
  auto stars = stars_of(S, T);
  std::vector<std::size_t> order(T.vertices);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return stars[a] < stars[b]; });
  std::vector<std::size_t> index(T.vertices);
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
  STree out;
  out.vertices = T.vertices;
  for (const auto& e : T.edges) {
    STree::Edge f{index[e.from], index[e.to], e.label};
    if (f.from > f.to) f = {f.to, f.from, S.inv(f.label)};
    out.edges.push_back(f);
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const STree::Edge& a, const STree::Edge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  return out;
}

}  // namespace tangles
