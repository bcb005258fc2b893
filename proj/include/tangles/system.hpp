#pragma once

#include "tangles/universe.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tangles {

/// Index of an oriented separation inside one SeparationSystem. Ids follow
/// increasing universe code, which is the canonical order of every output.
using Id = std::uint32_t;

/// Sorted, duplicate-free list of ids.
using IdSet = std::vector<Id>;

/// A separation system inside a universe: a subset of the universe closed
/// under the involution, with the induced order and involution.
class SeparationSystem {
 public:
  /// Throws ErrorKind::input if a code is invalid or the set is not closed
  /// under the involution.
  SeparationSystem(UniversePtr universe, std::vector<Code> members);

  /// The whole universe as a separation system.
  static SeparationSystem full(UniversePtr universe);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  /// Number of oriented separations.
  std::size_t size() const { return codes_.size(); }
  /// Canonical representatives (smaller id of each pair), in id order.
  const IdSet& unoriented() const { return reps_; }

  Code code(Id i) const { return codes_[i]; }
  const std::vector<Code>& codes() const { return codes_; }
  std::optional<Id> find(Code c) const;
  /// Like find(), but ErrorKind::input when c is not a member.
  Id id_of(Code c) const;
  bool contains(Code c) const { return index_.count(c) != 0; }

  Id inv(Id i) const { return inv_[i]; }
  Id rep(Id i) const { return i < inv_[i] ? i : inv_[i]; }
  bool leq(Id a, Id b) const { return universe_->leq(codes_[a], codes_[b]); }
  bool lt(Id a, Id b) const { return a != b && leq(a, b); }
  /// Meet / join in the universe, if the result lies in this system.
  std::optional<Id> meet(Id a, Id b) const { return find(universe_->meet(codes_[a], codes_[b])); }
  std::optional<Id> join(Id a, Id b) const { return find(universe_->join(codes_[a], codes_[b])); }

  bool degenerate(Id i) const { return inv_[i] == i; }
  bool small(Id i) const { return leq(i, inv_[i]); }
  bool cosmall(Id i) const { return leq(inv_[i], i); }
  /// Trivial in this system: some r with i < r and i < r*.
  bool trivial(Id i) const { return trivial_[i] != 0; }
  /// A witness r for trivial(i) (as an id), if any.
  std::optional<Id> trivial_witness(Id i) const;

  bool has_order() const { return universe_->has_order(); }
  Order order(Id i) const { return universe_->order(codes_[i]); }

  std::string describe(Id i) const { return universe_->describe(codes_[i]); }
  /// Parses a universe token and maps it into this system.
  Id parse(std::string_view token) const { return id_of(universe_->parse(token)); }

  /// Sub-system of the given members (codes must belong to this system).
  SeparationSystem subsystem(const IdSet& members) const;

 private:
  UniversePtr universe_;
  std::vector<Code> codes_;
  std::unordered_map<Code, Id> index_;
  std::vector<Id> inv_;
  IdSet reps_;
  std::vector<unsigned char> trivial_;
};

/// Sorted-set helpers.
IdSet make_set(std::vector<Id> ids);
bool set_contains(const IdSet& s, Id i);
bool is_subset(const IdSet& a, const IdSet& b);

}  // namespace tangles
