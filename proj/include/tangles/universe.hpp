#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tangles {

/// Backend-specific encoding of one oriented separation of a universe.
using Code = std::uint64_t;

/// Orders are exact non-negative rationals.
using Order = boost::rational<std::int64_t>;

/// An oriented separation of some universe.
struct Sep {
  Code code = 0;
  friend auto operator<=>(const Sep&, const Sep&) = default;
};

/// A finite lattice of oriented separations with an order-reversing
/// involution, optionally carrying an order function.
///
/// The member functions trust their arguments; the checked entry points
/// live in core.hpp.
class Universe {
 public:
  virtual ~Universe() = default;

  virtual std::string_view kind() const = 0;
  virtual bool valid(Code c) const = 0;
  virtual Code invert(Code c) const = 0;
  virtual bool leq(Code a, Code b) const = 0;
  virtual Code meet(Code a, Code b) const = 0;
  virtual Code join(Code a, Code b) const = 0;

  virtual bool has_order() const { return false; }
  /// Throws ErrorKind::unsupported when there is no order function.
  virtual Order order(Code c) const;

  /// Every element, in increasing code order. Backends with huge element
  /// sets throw ErrorKind::resource instead.
  virtual std::vector<Code> elements() const = 0;
  /// Elements of order < k (requires an order function).
  virtual std::vector<Code> elements_below(std::int64_t k) const;

  virtual std::string describe(Code c) const = 0;
  /// Inverse of describe(); throws ErrorKind::input on unknown tokens.
  virtual Code parse(std::string_view token) const = 0;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Explicit tables over named elements; codes are element indices.
class TableUniverse final : public Universe {
 public:
  struct Spec {
    std::vector<std::string> names;
    std::vector<std::size_t> involution;
    /// Generating pairs (a <= b); the reflexive-transitive closure is taken.
    std::vector<std::pair<std::size_t, std::size_t>> leq_pairs;
    /// Optional; computed from the order when absent and validated otherwise.
    std::optional<std::vector<std::vector<std::size_t>>> meet;
    std::optional<std::vector<std::vector<std::size_t>>> join;
    std::optional<std::vector<Order>> order;
  };

  /// Validates all lattice and involution laws; ErrorKind::input on failure.
  explicit TableUniverse(Spec spec);

  std::string_view kind() const override { return "table"; }
  bool valid(Code c) const override { return c < names_.size(); }
  Code invert(Code c) const override { return involution_[c]; }
  bool leq(Code a, Code b) const override { return leq_[a * n_ + b] != 0; }
  Code meet(Code a, Code b) const override { return meet_[a * n_ + b]; }
  Code join(Code a, Code b) const override { return join_[a * n_ + b]; }
  bool has_order() const override { return order_.has_value(); }
  Order order(Code c) const override;
  std::vector<Code> elements() const override;
  std::string describe(Code c) const override { return names_[c]; }
  Code parse(std::string_view token) const override;

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::size_t> involution_;
  std::vector<unsigned char> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::optional<std::vector<Order>> order_;
};

/// All bipartitions of a ground set of at most 24 points. The code of
/// (A->) is the bit mask of its first side A; (A->) <= (B->) iff A ⊆ B.
/// An optional edge-weighted cut function supplies the order |A->|.
class BipartitionUniverse final : public Universe {
 public:
  static constexpr std::size_t max_points = 24;

  struct CutEdge {
    std::size_t u = 0;
    std::size_t v = 0;
    Order weight{1};
  };

  explicit BipartitionUniverse(std::vector<std::string> points,
                               std::optional<std::vector<CutEdge>> cut = std::nullopt);

  std::string_view kind() const override { return "bipartition"; }
  bool valid(Code c) const override { return c <= full_; }
  Code invert(Code c) const override { return full_ & ~c; }
  bool leq(Code a, Code b) const override { return (a & ~b) == 0; }
  Code meet(Code a, Code b) const override { return a & b; }
  Code join(Code a, Code b) const override { return a | b; }
  bool has_order() const override { return cut_.has_value(); }
  Order order(Code c) const override;
  std::vector<Code> elements() const override;
  std::string describe(Code c) const override;
  Code parse(std::string_view token) const override;

  const std::vector<std::string>& points() const { return points_; }
  Code full() const { return full_; }
  /// Mask of a named subset; ErrorKind::input on unknown names.
  Code mask_of(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> points_;
  Code full_ = 0;
  std::optional<std::vector<CutEdge>> cut_;
};

/// Comma-separated names, optionally wrapped in braces: "{a,b}" or "a,b".
std::vector<std::string> split_name_list(std::string_view text);

}  // namespace tangles
