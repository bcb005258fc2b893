#include "tangles/error.hpp"
#include "tangles/orient.hpp"
#include "tangles/parallel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>

namespace tangles {

namespace {

constexpr std::int8_t kUnknown = 0;
constexpr std::int8_t kIn = 1;
constexpr std::int8_t kOut = 2;

struct Problem {
  const SeparationSystem* S = nullptr;
  const StarFamily* F = nullptr;
  bool profiles = false;
  bool impossible = false;
  std::vector<unsigned char> in_domain;
  std::vector<Id> degenerate;
  std::vector<std::array<Id, 2>> seq;
  std::vector<std::vector<Id>> below;
  std::vector<std::uint32_t> outside;  // per star: members outside the domain
  EnumLimits limits;
};

Problem make_problem(const SeparationSystem& S, const EnumOptions& opt) {
  Problem p;
  p.S = &S;
  p.F = (opt.family && !opt.family->empty()) ? opt.family : nullptr;
  p.profiles = opt.profiles;
  p.limits = opt.limits;
  if (opt.family && opt.family->system_size() != S.size())
    fail(ErrorKind::input, "star family belongs to another system");

  IdSet reps;
  if (opt.domain) {
    for (Id i : *opt.domain) {
      if (i >= S.size()) fail(ErrorKind::input, "domain member outside the system");
      reps.push_back(S.rep(i));
    }
    reps = make_set(std::move(reps));
  } else {
    reps = S.unoriented();
  }
  if (reps.size() > p.limits.max_seps)
    fail(ErrorKind::resource, "enumeration cap of " + std::to_string(p.limits.max_seps) +
                                  " unoriented separations exceeded (" + std::to_string(reps.size()) + ")");
  if (S.has_order())
    std::stable_sort(reps.begin(), reps.end(), [&](Id a, Id b) { return S.order(a) < S.order(b); });

  p.in_domain.assign(S.size(), 0);
  for (Id r : reps) {
    p.in_domain[r] = 1;
    p.in_domain[S.inv(r)] = 1;
    if (S.degenerate(r)) {
      p.degenerate.push_back(r);
      continue;
    }
    Id a = r, b = S.inv(r);
    if (S.lt(b, a)) std::swap(a, b);
    p.seq.push_back({a, b});
  }
  p.below.assign(S.size(), {});
  for (Id x = 0; x < S.size(); ++x) {
    if (!p.in_domain[x]) continue;
    for (Id y = 0; y < S.size(); ++y)
      if (p.in_domain[y] && S.rep(y) != S.rep(x) && S.lt(y, x)) p.below[x].push_back(y);
  }
  if (p.F) {
    p.outside.assign(p.F->size(), 0);
    for (std::size_t k = 0; k < p.F->size(); ++k) {
      const auto& m = p.F->members()[k];
      if (m.empty()) p.impossible = true;
      for (Id i : m)
        if (!p.in_domain[i]) ++p.outside[k];
    }
  }
  return p;
}

class Search {
 public:
  Search(const Problem& p, std::atomic<std::uint64_t>& nodes, std::atomic<std::size_t>& found)
      : p_(p), S_(*p.S), nodes_(nodes), found_(found), val_(S_.size(), kUnknown) {
    if (p_.F) {
      missing_.resize(p_.F->size());
      dead_.resize(p_.F->size());
      for (std::size_t k = 0; k < p_.F->size(); ++k) {
        missing_[k] = static_cast<std::uint32_t>(p_.F->members()[k].size() - p_.outside[k]);
        dead_[k] = p_.outside[k];
      }
    }
  }

  /// Assigns the degenerate separations; false if that already fails.
  bool init() {
    for (Id d : p_.degenerate)
      if (!assign(d)) return false;
    return true;
  }

  /// Puts x into the orientation and propagates. On false the caller must
  /// undo to an earlier mark.
  bool assign(Id x) {
    queue_.clear();
    queue_.push_back({x, true});
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      auto [id, in] = queue_[q];
      if (!(in ? set_in(id) : set_out(id))) return false;
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Id x = trail_.back();
      trail_.pop_back();
      if (val_[x] == kIn) {
        if (p_.F)
          for (auto k : p_.F->containing(x)) ++missing_[k];
        in_list_.pop_back();
      } else if (p_.F) {
        for (auto k : p_.F->containing(x)) --dead_[k];
      }
      val_[x] = kUnknown;
    }
  }

  /// DFS from `level`; complete orientations go to `out`. With a prefix
  /// depth, stops after that many decisions and records the prefix instead.
  void run(std::size_t level, std::vector<Id>& decisions, std::size_t prefix_depth,
           std::vector<std::vector<Id>>* prefixes, OrientationSet& out) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= p_.limits.max_nodes)
      fail(ErrorKind::resource, "enumeration node budget of " + std::to_string(p_.limits.max_nodes) + " exhausted");
    while (level < p_.seq.size() && val_[p_.seq[level][0]] != kUnknown) ++level;
    if (level == p_.seq.size()) {
      if (found_.fetch_add(1, std::memory_order_relaxed) >= p_.limits.max_results)
        fail(ErrorKind::resource, "more than " + std::to_string(p_.limits.max_results) + " orientations");
      out.push_back(current());
      return;
    }
    if (prefixes && decisions.size() == prefix_depth) {
      prefixes->push_back(decisions);
      return;
    }
    for (Id x : p_.seq[level]) {
      auto m = mark();
      decisions.push_back(x);
      if (assign(x)) run(level + 1, decisions, prefix_depth, prefixes, out);
      decisions.pop_back();
      undo(m);
    }
  }

 private:
  bool set_in(Id x) {
    if (val_[x] == kIn) return true;
    if (val_[x] == kOut) return false;
    val_[x] = kIn;
    trail_.push_back(x);
    in_list_.push_back(x);
    if (p_.F)
      for (auto k : p_.F->containing(x)) {
        --missing_[k];
        if (dead_[k] != 0) continue;
        if (missing_[k] == 0) return false;
        if (missing_[k] == 1)
          for (Id m : p_.F->members()[k])
            if (val_[m] != kIn) queue_.push_back({m, false});
      }
    if (!S_.degenerate(x)) queue_.push_back({S_.inv(x), false});
    // Consistency: nothing strictly below x may have its inverse in.
    for (Id y : p_.below[x]) queue_.push_back({S_.inv(y), false});
    if (p_.profiles)
      for (Id y : in_list_) {
        auto j = S_.join(x, y);
        if (!j || !p_.in_domain[*j]) continue;
        if (S_.degenerate(*j)) return false;
        queue_.push_back({S_.inv(*j), false});
      }
    return true;
  }

  bool set_out(Id x) {
    if (val_[x] == kOut) return true;
    if (val_[x] == kIn) return false;
    val_[x] = kOut;
    trail_.push_back(x);
    if (p_.F)
      for (auto k : p_.F->containing(x)) ++dead_[k];
    queue_.push_back({S_.inv(x), true});
    return true;
  }

  Orientation current() const {
    Orientation o(S_.size());
    for (Id i : in_list_) o.insert(i);
    return o;
  }

  const Problem& p_;
  const SeparationSystem& S_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<std::size_t>& found_;
  std::vector<std::int8_t> val_;
  std::vector<std::uint32_t> missing_;
  std::vector<std::uint32_t> dead_;
  std::vector<Id> trail_;
  std::vector<Id> in_list_;
  std::vector<std::pair<Id, bool>> queue_;
};

std::size_t prefix_depth_for(int workers) {
  std::size_t d = 4;
  while ((std::size_t{1} << (d - 4)) < static_cast<std::size_t>(workers) && d < 16) ++d;
  return d;
}

}  // namespace

OrientationSet enumerate(const SeparationSystem& S, const EnumOptions& options) {
  Problem p = make_problem(S, options);
  if (p.impossible) return {};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::size_t> found{0};
  OrientationSet out;

  Search root(p, nodes, found);
  if (!root.init()) return {};
  std::vector<Id> decisions;
  const int workers = jobs();
  if (workers <= 1) {
    root.run(0, decisions, 0, nullptr, out);
    canonicalize(out);
    return out;
  }

  std::vector<std::vector<Id>> prefixes;
  root.run(0, decisions, prefix_depth_for(workers), &prefixes, out);

  std::vector<OrientationSet> parts(prefixes.size());
  std::exception_ptr error;
  std::mutex error_lock;
  const auto n = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t t = 0; t < n; ++t) {
    try {
      Search s(p, nodes, found);
      bool ok = s.init();
      for (Id x : prefixes[t]) ok = ok && s.assign(x);
      if (!ok) fail(ErrorKind::integrity, "search prefix failed to replay");
      std::vector<Id> dec = prefixes[t];
      s.run(0, dec, 0, nullptr, parts[t]);
    } catch (...) {
      std::lock_guard<std::mutex> guard(error_lock);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  canonicalize(out);
  return out;
}

OrientationSet enumerate_tangles(const SeparationSystem& S, const StarFamily& F, const EnumLimits& limits) {
  EnumOptions opt;
  opt.family = &F;
  opt.limits = limits;
  return enumerate(S, opt);
}

OrientationSet enumerate_profiles(const SeparationSystem& S, const EnumLimits& limits) {
  EnumOptions opt;
  opt.profiles = true;
  opt.limits = limits;
  return enumerate(S, opt);
}

OrientationSet enumerate_consistent(const SeparationSystem& S, const IdSet& domain, const EnumLimits& limits) {
  EnumOptions opt;
  opt.domain = domain;
  opt.limits = limits;
  return enumerate(S, opt);
}

namespace reference {

OrientationSet enumerate(const SeparationSystem& S, const EnumOptions& options) {
  Problem p = make_problem(S, options);
  if (p.impossible) return {};
  const StarFamily* F = p.F;
  Orientation O(S.size());
  std::vector<Id> chosen;
  OrientationSet out;
  std::uint64_t nodes = 0;

  auto completes_star = [&](Id x) {
    if (!F) return false;
    for (auto k : F->containing(x))
      if (p.outside[k] == 0 && O.contains_all(F->members()[k])) return true;
    return false;
  };
  for (Id d : p.degenerate) {
    O.insert(d);
    chosen.push_back(d);
  }
  for (Id d : p.degenerate)
    for (Id e : p.degenerate)
      if (S.lt(d, e)) return {};
  for (Id d : p.degenerate)
    if (completes_star(d)) return {};

  auto fits = [&](Id x) {
    for (Id y : chosen)
      if (S.rep(x) != S.rep(y) && (S.lt(S.inv(x), y) || S.lt(S.inv(y), x))) return false;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t level) -> void {
    if (++nodes > p.limits.max_nodes)
      fail(ErrorKind::resource, "enumeration node budget of " + std::to_string(p.limits.max_nodes) + " exhausted");
    if (level == p.seq.size()) {
      if (p.profiles && find_profile_violation(S, O)) return;
      if (out.size() >= p.limits.max_results)
        fail(ErrorKind::resource, "more than " + std::to_string(p.limits.max_results) + " orientations");
      out.push_back(O);
      return;
    }
    for (Id x : p.seq[level]) {
      if (!fits(x)) continue;
      O.insert(x);
      chosen.push_back(x);
      if (!completes_star(x)) self(self, level + 1);
      chosen.pop_back();
      O.erase(x);
    }
  };
  dfs(dfs, 0);
  canonicalize(out);
  return out;
}

}  // namespace reference

}  // namespace tangles
