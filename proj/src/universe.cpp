#include "tangles/universe.hpp"

#include "tangles/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace tangles {

Order Universe::order(Code) const {
  fail(ErrorKind::unsupported, "universe has no order function");
}

std::vector<Code> Universe::elements_below(std::int64_t k) const {
  if (!has_order()) fail(ErrorKind::unsupported, "universe has no order function");
  std::vector<Code> out;
  for (Code c : elements())
    if (order(c) < Order(k)) out.push_back(c);
  return out;
}

std::vector<std::string> split_name_list(std::string_view text) {
  std::string_view body = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  body = trim(body);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail(ErrorKind::input, "unbalanced braces in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    auto part = trim(body.substr(start, comma - start));
    if (!part.empty()) out.emplace_back(part);
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------- tables

namespace {

std::string pair_name(const std::vector<std::string>& names, std::size_t a, std::size_t b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

TableUniverse::TableUniverse(Spec spec)
    : n_(spec.names.size()),
      names_(std::move(spec.names)),
      involution_(std::move(spec.involution)),
      order_(std::move(spec.order)) {
  if (n_ == 0) fail(ErrorKind::input, "table universe has no elements");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::input, "duplicate element name in table universe");
  }
  if (involution_.size() != n_) fail(ErrorKind::input, "involution must list every element");
  for (std::size_t i = 0; i < n_; ++i) {
    if (involution_[i] >= n_) fail(ErrorKind::input, "involution maps outside the universe");
    if (involution_[involution_[i]] != i)
      fail(ErrorKind::input, "involution is not involutive at " + names_[i]);
  }

  leq_.assign(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) leq_[i * n_ + i] = 1;
  for (auto [a, b] : spec.leq_pairs) {
    if (a >= n_ || b >= n_) fail(ErrorKind::input, "leq pair refers to an unknown element");
    leq_[a * n_ + b] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      if (leq_[i * n_ + k])
        for (std::size_t j = 0; j < n_; ++j)
          if (leq_[k * n_ + j]) leq_[i * n_ + j] = 1;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (leq_[i * n_ + j] && leq_[j * n_ + i])
        fail(ErrorKind::input, "leq is not antisymmetric on " + pair_name(names_, i, j));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (leq_[i * n_ + j] && !leq_[involution_[j] * n_ + involution_[i]])
        fail(ErrorKind::input, "involution is not order-reversing on " + pair_name(names_, i, j));

  // Greatest lower / least upper bounds.
  auto bound = [&](std::size_t a, std::size_t b, bool lower) -> std::size_t {
    auto below = [&](std::size_t x, std::size_t y) { return lower ? leq_[x * n_ + y] != 0 : leq_[y * n_ + x] != 0; };
    std::size_t best = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!below(c, a) || !below(c, b)) continue;
      if (best == n_ || below(best, c)) best = c;
    }
    if (best == n_) return n_;
    for (std::size_t c = 0; c < n_; ++c)
      if (below(c, a) && below(c, b) && !below(c, best)) return n_;
    return best;
  };
  auto fill = [&](std::vector<std::size_t>& table, bool lower,
                  const std::optional<std::vector<std::vector<std::size_t>>>& given, const char* what) {
    table.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        std::size_t c = bound(a, b, lower);
        if (c == n_)
          fail(ErrorKind::input, std::string("no ") + what + " for " + pair_name(names_, a, b) + ": not a lattice");
        if (given) {
          if (given->size() != n_ || (*given)[a].size() != n_)
            fail(ErrorKind::input, std::string(what) + " table has the wrong shape");
          if ((*given)[a][b] != c)
            fail(ErrorKind::input, std::string(what) + " table disagrees with leq at " + pair_name(names_, a, b));
        }
        table[a * n_ + b] = c;
      }
  };
  fill(meet_, true, spec.meet, "meet");
  fill(join_, false, spec.join, "join");

  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (involution_[join_[a * n_ + b]] != meet_[involution_[a] * n_ + involution_[b]])
        fail(ErrorKind::input, "De Morgan law fails at " + pair_name(names_, a, b));

  if (order_) {
    if (order_->size() != n_) fail(ErrorKind::input, "order must list every element");
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*order_)[i] < Order(0)) fail(ErrorKind::input, "negative order at " + names_[i]);
      if ((*order_)[i] != (*order_)[involution_[i]])
        fail(ErrorKind::input, "order differs between orientations of " + names_[i]);
    }
  }
}

Order TableUniverse::order(Code c) const {
  if (!order_) fail(ErrorKind::unsupported, "table universe has no order function");
  return (*order_)[c];
}

std::vector<Code> TableUniverse::elements() const {
  std::vector<Code> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = i;
  return out;
}

Code TableUniverse::parse(std::string_view token) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == token) return i;
  fail(ErrorKind::input, "unknown element '" + std::string(token) + "'");
}

// ---------------------------------------------------------- bipartitions

BipartitionUniverse::BipartitionUniverse(std::vector<std::string> points,
                                         std::optional<std::vector<CutEdge>> cut)
    : points_(std::move(points)), cut_(std::move(cut)) {
  if (points_.size() > max_points)
    fail(ErrorKind::input, "bipartition universe supports at most 24 points");
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::input, "duplicate point name in bipartition universe");
  for (const auto& p : points_)
    if (p.empty() || p.find_first_of("{}|, ") != std::string::npos)
      fail(ErrorKind::input, "invalid point name '" + p + "'");
  full_ = points_.empty() ? 0 : ((Code{1} << points_.size()) - 1);
  if (cut_)
    for (const auto& e : *cut_) {
      if (e.u >= points_.size() || e.v >= points_.size())
        fail(ErrorKind::input, "cut edge refers to an unknown point");
      if (e.weight < Order(0)) fail(ErrorKind::input, "negative cut weight");
    }
}

Order BipartitionUniverse::order(Code c) const {
  if (!cut_) fail(ErrorKind::unsupported, "bipartition universe has no cut function");
  Order total{0};
  for (const auto& e : *cut_)
    if (((c >> e.u) & 1U) != ((c >> e.v) & 1U)) total += e.weight;
  return total;
}

std::vector<Code> BipartitionUniverse::elements() const {
  std::vector<Code> out;
  out.reserve(static_cast<std::size_t>(full_) + 1);
  for (Code c = 0; c <= full_; ++c) out.push_back(c);
  return out;
}

std::string BipartitionUniverse::describe(Code c) const {
  std::string first = "{", second = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::string& side = ((c >> i) & 1U) ? first : second;
    if (side.size() > 1) side += ',';
    side += points_[i];
  }
  return first + "}|" + second + "}";
}

Code BipartitionUniverse::mask_of(const std::vector<std::string>& names) const {
  Code mask = 0;
  for (const auto& name : names) {
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) fail(ErrorKind::input, "unknown point '" + name + "'");
    mask |= Code{1} << static_cast<unsigned>(it - points_.begin());
  }
  return mask;
}

Code BipartitionUniverse::parse(std::string_view token) const {
  auto bar = token.find('|');
  Code first = mask_of(split_name_list(token.substr(0, bar)));
  if (bar != std::string_view::npos) {
    Code second = mask_of(split_name_list(token.substr(bar + 1)));
    if ((first & second) != 0 || (first | second) != full_)
      fail(ErrorKind::input, "'" + std::string(token) + "' is not a bipartition");
  }
  return first;
}

}  // namespace tangles
