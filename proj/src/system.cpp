#include "tangles/system.hpp"

#include "tangles/error.hpp"

#include <algorithm>

namespace tangles {

SeparationSystem::SeparationSystem(UniversePtr universe, std::vector<Code> members)
    : universe_(std::move(universe)), codes_(std::move(members)) {
  if (!universe_) fail(ErrorKind::input, "separation system without a universe");
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  if (codes_.size() >= std::numeric_limits<Id>::max())
    fail(ErrorKind::resource, "separation system too large");
  index_.reserve(codes_.size() * 2);
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (!universe_->valid(codes_[i]))
      fail(ErrorKind::input, "code " + std::to_string(codes_[i]) + " is not an element of the universe");
    index_.emplace(codes_[i], static_cast<Id>(i));
  }
  inv_.resize(codes_.size());
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    auto it = index_.find(universe_->invert(codes_[i]));
    if (it == index_.end())
      fail(ErrorKind::input, "separation system is not closed under the involution at " +
                                 universe_->describe(codes_[i]));
    inv_[i] = it->second;
  }
  for (std::size_t i = 0; i < codes_.size(); ++i)
    if (inv_[i] >= i) reps_.push_back(static_cast<Id>(i));

  trivial_.assign(codes_.size(), 0);
  for (std::size_t i = 0; i < codes_.size(); ++i)
    if (trivial_witness(static_cast<Id>(i))) trivial_[i] = 1;
}

SeparationSystem SeparationSystem::full(UniversePtr universe) {
  auto elems = universe->elements();
  return SeparationSystem(std::move(universe), std::move(elems));
}

std::optional<Id> SeparationSystem::find(Code c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Id SeparationSystem::id_of(Code c) const {
  auto it = index_.find(c);
  if (it == index_.end())
    fail(ErrorKind::input, "'" + (universe_->valid(c) ? universe_->describe(c) : std::to_string(c)) +
                               "' is not in the separation system");
  return it->second;
}

std::optional<Id> SeparationSystem::trivial_witness(Id i) const {
  for (Id r : reps_) {
    if (rep(i) == r) continue;
    if (lt(i, r) && lt(i, inv_[r])) return r;
  }
  return std::nullopt;
}

SeparationSystem SeparationSystem::subsystem(const IdSet& members) const {
  std::vector<Code> codes;
  codes.reserve(members.size());
  for (Id i : members) codes.push_back(codes_[i]);
  return SeparationSystem(universe_, std::move(codes));
}

IdSet make_set(std::vector<Id> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool set_contains(const IdSet& s, Id i) { return std::binary_search(s.begin(), s.end(), i); }

bool is_subset(const IdSet& a, const IdSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace tangles
