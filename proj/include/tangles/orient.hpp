#pragma once

#include "tangles/core.hpp"
#include "tangles/system.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tangles {

/// A set of oriented separations of one system, stored as a bitset over
/// ids. Used both for full orientations and for partial ones.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::size_t system_size) : bits_(system_size) {}
  Orientation(std::size_t system_size, const IdSet& members);

  std::size_t system_size() const { return bits_.size(); }
  bool contains(Id i) const { return i < bits_.size() && bits_.test(i); }
  void insert(Id i) { bits_.set(i); }
  void erase(Id i) { bits_.reset(i); }
  std::size_t count() const { return bits_.count(); }
  bool contains_all(const IdSet& set) const;
  IdSet ids() const;

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.bits_ == b.bits_; }
  /// Canonical order: lexicographic on the sorted id lists.
  friend bool operator<(const Orientation& a, const Orientation& b);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

/// Orientations over one system, kept sorted and duplicate-free.
using OrientationSet = std::vector<Orientation>;
void canonicalize(OrientationSet& set);

/// A family of sets of oriented separations (usually stars), sorted.
class StarFamily {
 public:
  StarFamily() = default;
  StarFamily(std::size_t system_size, std::vector<IdSet> members);

  std::size_t system_size() const { return system_size_; }
  const std::vector<IdSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const IdSet& set) const;
  /// Indices (into members()) of the sets containing i.
  const std::vector<std::uint32_t>& containing(Id i) const { return by_member_[i]; }

  StarFamily united(const std::vector<IdSet>& extra) const;

  struct Flags {
    std::optional<bool> standard;
    std::optional<bool> small_singletons;
    std::optional<bool> profile_respecting;
    std::optional<bool> closed_under_shifting;
  };
  Flags flags;

 private:
  std::size_t system_size_ = 0;
  std::vector<IdSet> members_;
  std::vector<std::vector<std::uint32_t>> by_member_;
};

bool is_star(const SeparationSystem& S, const IdSet& set);
/// Whether no member of the set is the inverse of another non-degenerate member.
bool is_tight(const SeparationSystem& S, const IdSet& set);

/// Exactly one orientation of every separation (degenerate ones included).
bool is_orientation(const SeparationSystem& S, const Orientation& O);

/// First pair (r̄, s) in O with r < s for distinct separations r, s.
std::optional<IdPair> find_inconsistency(const SeparationSystem& S, const Orientation& O);
inline bool is_consistent(const SeparationSystem& S, const Orientation& O) { return !find_inconsistency(S, O); }
bool is_consistent(const SeparationSystem& S, const IdSet& O);

/// First pair (r, s) in O with r ∨ s in S and (r ∨ s)* in O, or the
/// inconsistency witness. O must be an orientation.
std::optional<IdPair> find_profile_violation(const SeparationSystem& S, const Orientation& O);
inline bool is_profile(const SeparationSystem& S, const Orientation& O) {
  return is_orientation(S, O) && !find_profile_violation(S, O);
}

bool is_regular(const SeparationSystem& S, const Orientation& O);

/// Index of the first member of F contained in O.
std::optional<std::size_t> forbidden_member(const Orientation& O, const StarFamily& F);
inline bool is_f_tangle(const SeparationSystem& S, const Orientation& O, const StarFamily& F) {
  return is_orientation(S, O) && is_consistent(S, O) && !forbidden_member(O, F);
}

/// s given by either orientation; degenerate s is an input error.
bool distinguishes(const SeparationSystem& S, Id s, const Orientation& a, const Orientation& b);
/// First pair (by index) of orientations not distinguished by any member of N.
std::optional<std::pair<std::size_t, std::size_t>> undistinguished_pair(const SeparationSystem& S, const IdSet& N,
                                                                        const OrientationSet& set);
inline bool distinguishes_set(const SeparationSystem& S, const IdSet& N, const OrientationSet& set) {
  return !undistinguished_pair(S, N, set);
}
/// No separation of S of lower order distinguishes a and b.
bool distinguishes_efficiently(const SeparationSystem& S, Id s, const Orientation& a, const Orientation& b);

bool essential_star(const IdSet& star, const OrientationSet& set);

/// The ≤-maximal members of O.
IdSet maximal_in(const SeparationSystem& S, const Orientation& O);

/// {r̄} for every trivial r.
std::vector<IdSet> standard_singletons(const SeparationSystem& S);
/// {r̄} for every small non-degenerate r (the co-small orientation).
std::vector<IdSet> regularity_singletons(const SeparationSystem& S);
/// P_S: all sets {r, s, (r ∨ s)*} with r, s, r ∨ s in S. Not necessarily stars.
StarFamily profile_family(const SeparationSystem& S);

// ------------------------------------------------------------ enumeration

struct EnumLimits {
  /// Cap on the number of unoriented separations searched.
  std::size_t max_seps = 4096;
  std::uint64_t max_nodes = 200'000'000;
  std::size_t max_results = 1'000'000;
};

struct EnumOptions {
  const StarFamily* family = nullptr;
  /// Also require the profile condition.
  bool profiles = false;
  /// Orient only these separations (either orientation may be listed).
  std::optional<IdSet> domain;
  EnumLimits limits;
};

/// All consistent orientations (of the domain) satisfying the options, in
/// canonical order. Search: DFS along separations sorted by (order, id),
/// with consistency propagation, per-star countdown counters and, in
/// profile mode, join propagation. Parallel over search prefixes.
OrientationSet enumerate(const SeparationSystem& S, const EnumOptions& options);

OrientationSet enumerate_tangles(const SeparationSystem& S, const StarFamily& F, const EnumLimits& limits = {});
OrientationSet enumerate_profiles(const SeparationSystem& S, const EnumLimits& limits = {});
OrientationSet enumerate_consistent(const SeparationSystem& S, const IdSet& domain, const EnumLimits& limits = {});

namespace reference {
/// Unpropagated DFS: pairwise consistency on assignment, stars checked once
/// fully assigned, profile condition checked at the leaves.
OrientationSet enumerate(const SeparationSystem& S, const EnumOptions& options);
}  // namespace reference

struct StarFamilyReport {
  bool standard = false;
  bool small_singletons = false;
  bool profile_respecting = false;
  std::optional<bool> closed_under_shifting;
  bool friendly = false;
  std::optional<Id> missing_standard;      // trivial r lacking {r̄}
  std::optional<Id> missing_singleton;     // small r lacking {r̄}
  std::optional<std::size_t> non_profile;  // index into the tangle list
  std::size_t tangles = 0;
};

/// closed_under_shifting is supplied by the caller (see duality.hpp).
StarFamilyReport check_star_family(const SeparationSystem& S, const StarFamily& F,
                                   std::optional<bool> closed_under_shifting, const EnumLimits& limits = {});

}  // namespace tangles
