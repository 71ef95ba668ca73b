#include "flowshop/indexed_tree.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace flowshop {

IndexedTree::IndexedTree(std::span<const std::int64_t> values,
                         TiePolicy policy)
    : size_(values.size()), policy_(policy) {
  if (size_ >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("IndexedTree: too many elements");
  }
  while (base_ < size_) base_ <<= 1;
  nodes_.assign(2 * base_, padding());
  for (std::size_t i = 1; i <= size_; ++i) {
    nodes_[base_ + i - 1] = leaf(values[i - 1], i);
  }
  for (std::size_t v = base_ - 1; v >= 1; --v) {
    nodes_[v] = merge(nodes_[2 * v], nodes_[2 * v + 1]);
  }
}

// Neutral for every aggregate, so internal nodes over the padded tail stay
// exact and the root summarises [1, n]. Requires |partial sums| < 2^62.
IndexedTree::Node IndexedTree::padding() {
  constexpr std::int64_t kFar = std::int64_t{1} << 61;
  return Node{0,
              std::numeric_limits<std::int64_t>::min(),
              std::numeric_limits<std::int64_t>::max(),
              -kFar,
              kFar,
              0, 0, 0, 0};
}

IndexedTree::Node IndexedTree::leaf(std::int64_t v, std::size_t i) {
  const auto at = static_cast<std::uint32_t>(i);
  return Node{v, v, v, v, v, at, at, at, at};
}

template <bool kRightOnTie>
IndexedTree::Node IndexedTree::merge_as(const Node& lhs, const Node& rhs) {
  Node out;
  out.sum = lhs.sum + rhs.sum;

  const bool max_right = kRightOnTie ? rhs.max >= lhs.max : rhs.max > lhs.max;
  out.max = max_right ? rhs.max : lhs.max;
  out.max_at = max_right ? rhs.max_at : lhs.max_at;

  const bool min_right = kRightOnTie ? rhs.min <= lhs.min : rhs.min < lhs.min;
  out.min = min_right ? rhs.min : lhs.min;
  out.min_at = min_right ? rhs.min_at : lhs.min_at;

  const std::int64_t hi = lhs.sum + rhs.max_ps;
  const bool hi_right = kRightOnTie ? hi >= lhs.max_ps : hi > lhs.max_ps;
  out.max_ps = hi_right ? hi : lhs.max_ps;
  out.max_ps_at = hi_right ? rhs.max_ps_at : lhs.max_ps_at;

  const std::int64_t lo = lhs.sum + rhs.min_ps;
  const bool lo_right = kRightOnTie ? lo <= lhs.min_ps : lo < lhs.min_ps;
  out.min_ps = lo_right ? lo : lhs.min_ps;
  out.min_ps_at = lo_right ? rhs.min_ps_at : lhs.min_ps_at;
  return out;
}

IndexedTree::Node IndexedTree::merge(const Node& lhs, const Node& rhs) const {
  return policy_ == TiePolicy::kRightmost ? merge_as<true>(lhs, rhs)
                                          : merge_as<false>(lhs, rhs);
}

void IndexedTree::check_index(std::size_t i) const {
  if (i == 0 || i > size_) {
    throw std::out_of_range("IndexedTree: index " + std::to_string(i) +
                            " outside [1, " + std::to_string(size_) + "]");
  }
}

void IndexedTree::check_range(std::size_t l, std::size_t r) const {
  if (l == 0 || l > r || r > size_) {
    throw std::out_of_range("IndexedTree: range [" + std::to_string(l) + ", " +
                            std::to_string(r) + "] outside [1, " +
                            std::to_string(size_) + "]");
  }
}

// Combines the canonical nodes of [l, r] in position order. Requires a
// non-empty, in-bounds range.
IndexedTree::Node IndexedTree::fold(std::size_t l, std::size_t r) const {
  if (r == size_) {
    if (l == 1) return nodes_[1];
    r = base_;  // the padded tail is neutral; fewer boundary nodes
  }
  return policy_ == TiePolicy::kRightmost ? fold_as<true>(l, r)
                                          : fold_as<false>(l, r);
}

template <bool kRightOnTie>
IndexedTree::Node IndexedTree::fold_as(std::size_t l, std::size_t r) const {
  std::size_t lo = base_ + l - 1;
  std::size_t hi = base_ + r;  // exclusive
  Node left = padding();
  Node right = padding();
  for (; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) left = merge_as<kRightOnTie>(left, nodes_[lo++]);
    if (hi & 1) right = merge_as<kRightOnTie>(nodes_[--hi], right);
  }
  return merge_as<kRightOnTie>(left, right);
}

std::int64_t IndexedTree::value(std::size_t i) const {
  check_index(i);
  return nodes_[base_ + i - 1].sum;
}

void IndexedTree::add(std::size_t i, std::int64_t x) {
  check_index(i);
  set(i, nodes_[base_ + i - 1].sum + x);
}

void IndexedTree::set(std::size_t i, std::int64_t v) {
  check_index(i);
  if (policy_ == TiePolicy::kRightmost) {
    set_as<true>(i, v);
  } else {
    set_as<false>(i, v);
  }
}

template <bool kRightOnTie>
void IndexedTree::set_as(std::size_t i, std::int64_t v) {
  std::size_t at = base_ + i - 1;
  nodes_[at] = leaf(v, i);
  for (at >>= 1; at >= 1; at >>= 1) {
    nodes_[at] = merge_as<kRightOnTie>(nodes_[2 * at], nodes_[2 * at + 1]);
  }
}

std::int64_t IndexedTree::prefix_sum(std::size_t i) const {
  if (i == 0) return 0;
  check_index(i);
  return fold(1, i).sum;
}

std::int64_t IndexedTree::range_sum(std::size_t l, std::size_t r) const {
  if (l >= 1 && l == r + 1 && r <= size_) return 0;
  check_range(l, r);
  return fold(l, r).sum;
}

Extremum IndexedTree::range_max(std::size_t l, std::size_t r) const {
  check_range(l, r);
  const Node n = fold(l, r);
  return {n.max, n.max_at};
}

Extremum IndexedTree::range_min(std::size_t l, std::size_t r) const {
  check_range(l, r);
  const Node n = fold(l, r);
  return {n.min, n.min_at};
}

Extremum IndexedTree::max_prefix_sums(std::size_t i) const {
  if (i == 0) return {};
  check_index(i);
  const Node n = fold(1, i);
  return {n.max_ps, n.max_ps_at};
}

Extremum IndexedTree::min_prefix_sums(std::size_t i) const {
  if (i == 0) return {};
  check_index(i);
  const Node n = fold(1, i);
  return {n.min_ps, n.min_ps_at};
}

Extremum IndexedTree::max_prefix_sums(std::size_t l, std::size_t r) const {
  check_range(l, r);
  const Node n = fold(l, r);
  return {offset_before(l, r, n) + n.max_ps, n.max_ps_at};
}

Extremum IndexedTree::min_prefix_sums(std::size_t l, std::size_t r) const {
  check_range(l, r);
  const Node n = fold(l, r);
  return {offset_before(l, r, n) + n.min_ps, n.min_ps_at};
}

std::int64_t IndexedTree::offset_before(std::size_t l, std::size_t r,
                                        const Node& range) const {
  if (r == size_) return nodes_[1].sum - range.sum;
  return prefix_sum(l - 1);
}

std::size_t IndexedTree::last_at_least(std::size_t l, std::size_t r,
                                       std::int64_t threshold) const {
  check_range(l, r);
  // Canonical cover of [l, r], left to right.
  std::array<std::size_t, 128> cover{};
  std::size_t left_count = 0;
  std::array<std::size_t, 64> rights{};
  std::size_t right_count = 0;
  for (std::size_t lo = base_ + l - 1, hi = base_ + r; lo < hi;
       lo >>= 1, hi >>= 1) {
    if (lo & 1) cover[left_count++] = lo++;
    if (hi & 1) rights[right_count++] = --hi;
  }
  while (right_count > 0) cover[left_count++] = rights[--right_count];

  for (std::size_t c = left_count; c-- > 0;) {
    std::size_t v = cover[c];
    if (nodes_[v].max < threshold) continue;
    while (v < base_) {
      v = nodes_[2 * v + 1].max >= threshold ? 2 * v + 1 : 2 * v;
    }
    return v - base_ + 1;
  }
  return 0;
}

}  // namespace flowshop
