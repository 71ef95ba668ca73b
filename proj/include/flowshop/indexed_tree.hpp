#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace flowshop {

/// Which position an extremum query reports when several positions share the
/// extremal value.
enum class TiePolicy { kLeftmost, kRightmost };

/// Result of an extremum query. `index` is 1-based; 0 means "no index", which
/// only happens for the empty-range convention of the prefix-sum extrema.
struct Extremum {
  std::int64_t value = 0;
  std::size_t index = 0;

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// Modified binary indexed tree over an integer array A[1..n].
///
/// Point updates plus, in O(log n) each: prefix sums, prefix/suffix/range
/// extrema of the values, and extrema over prefix partial sums
/// A[1] + ... + A[k], all reporting an attaining index under the tree's tie
/// policy. Internally an implicit complete binary tree; every node keeps the
/// range sum together with the best value and best prefix-sum of its range.
///
/// Index arguments outside the documented ranges throw std::out_of_range.
class IndexedTree {
 public:
  IndexedTree() = default;
  explicit IndexedTree(std::span<const std::int64_t> values,
                       TiePolicy policy = TiePolicy::kRightmost);

  std::size_t size() const { return size_; }
  TiePolicy tie_policy() const { return policy_; }

  /// Current leaf value A[i].
  std::int64_t value(std::size_t i) const;

  void add(std::size_t i, std::int64_t x);
  void set(std::size_t i, std::int64_t v);

  /// A[1] + ... + A[i]; 0 for i == 0.
  std::int64_t prefix_sum(std::size_t i) const;
  /// A[l] + ... + A[r]; 0 for an empty range (l == r + 1).
  std::int64_t range_sum(std::size_t l, std::size_t r) const;

  Extremum prefix_max(std::size_t i) const { return range_max(1, i); }
  Extremum prefix_min(std::size_t i) const { return range_min(1, i); }
  Extremum suffix_max(std::size_t i) const { return range_max(i, size_); }
  Extremum suffix_min(std::size_t i) const { return range_min(i, size_); }
  Extremum range_max(std::size_t l, std::size_t r) const;
  Extremum range_min(std::size_t l, std::size_t r) const;

  /// max over k in [1, i] of prefix_sum(k). For i == 0 returns {0, 0}.
  Extremum max_prefix_sums(std::size_t i) const;
  Extremum min_prefix_sums(std::size_t i) const;
  /// max over k in [l, r] of prefix_sum(k) (absolute partial sums, not
  /// restarted at l).
  Extremum max_prefix_sums(std::size_t l, std::size_t r) const;
  Extremum min_prefix_sums(std::size_t l, std::size_t r) const;

  /// Largest k in [l, r] with A[k] >= threshold, or 0 if there is none.
  std::size_t last_at_least(std::size_t l, std::size_t r,
                            std::int64_t threshold) const;

 private:
  struct Node {
    std::int64_t sum;
    std::int64_t max;
    std::int64_t min;
    std::int64_t max_ps;
    std::int64_t min_ps;
    std::uint32_t max_at;
    std::uint32_t min_at;
    std::uint32_t max_ps_at;
    std::uint32_t min_ps_at;
  };

  static Node leaf(std::int64_t v, std::size_t i);
  static Node padding();
  std::int64_t offset_before(std::size_t l, std::size_t r,
                             const Node& range) const;
  template <bool kRightOnTie>
  static Node merge_as(const Node& lhs, const Node& rhs);
  Node merge(const Node& lhs, const Node& rhs) const;
  Node fold(std::size_t l, std::size_t r) const;
  template <bool kRightOnTie>
  Node fold_as(std::size_t l, std::size_t r) const;
  template <bool kRightOnTie>
  void set_as(std::size_t i, std::int64_t v);
  void check_range(std::size_t l, std::size_t r) const;
  void check_index(std::size_t i) const;

  std::size_t size_ = 0;
  std::size_t base_ = 1;  // leaf of position i lives at base_ + i - 1
  TiePolicy policy_ = TiePolicy::kRightmost;
  std::vector<Node> nodes_;
};

}  // namespace flowshop
