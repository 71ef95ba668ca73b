#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/indexed_tree.hpp"
#include "flowshop/pareto.hpp"

// Reference implementations. Only the Extremum/TiePolicy vocabulary types are
// shared with IndexedTree; no tree code runs here.
namespace flowshop::oracles {

/// The same greedy as flowshop::solve with every per-iteration quantity
/// recomputed by linear scans over the alive jobs: O(n^2) overall.
/// Same tie rules, so the result is identical to solve().
ParetoResult pk_quadratic(const Instance& instance,
                          SelectionRule rule = SelectionRule::kExact);

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultGuard = 12;
inline constexpr std::size_t kHardGuard = 20;

/// Minimum SPT makespan over every k-subset, for k = 0..n, by enumerating all
/// 2^n subsets. Points are returned in increasing `retained` order.
/// Throws GuardExceeded if n > min(guard, kHardGuard).
std::vector<ParetoPoint> brute_force_front(const Instance& instance,
                                           std::size_t guard = kDefaultGuard);

/// Linear-scan twin of IndexedTree with the same query contract.
class NaiveArray {
 public:
  explicit NaiveArray(std::vector<std::int64_t> values,
                      TiePolicy policy = TiePolicy::kRightmost)
      : values_(std::move(values)), policy_(policy) {}

  std::size_t size() const { return values_.size(); }
  std::int64_t value(std::size_t i) const;
  void add(std::size_t i, std::int64_t x);
  void set(std::size_t i, std::int64_t v);

  std::int64_t prefix_sum(std::size_t i) const;
  Extremum range_max(std::size_t l, std::size_t r) const;
  Extremum range_min(std::size_t l, std::size_t r) const;
  Extremum prefix_max(std::size_t i) const { return range_max(1, i); }
  Extremum prefix_min(std::size_t i) const { return range_min(1, i); }
  Extremum suffix_max(std::size_t i) const { return range_max(i, size()); }
  Extremum suffix_min(std::size_t i) const { return range_min(i, size()); }
  Extremum max_prefix_sums(std::size_t i) const;
  Extremum min_prefix_sums(std::size_t i) const;
  Extremum max_prefix_sums(std::size_t l, std::size_t r) const;
  Extremum min_prefix_sums(std::size_t l, std::size_t r) const;
  std::size_t last_at_least(std::size_t l, std::size_t r,
                            std::int64_t threshold) const;

 private:
  void check_range(std::size_t l, std::size_t r) const;
  template <typename Better>
  Extremum scan(std::size_t l, std::size_t r, bool partial_sums,
                Better better) const;

  std::vector<std::int64_t> values_;
  TiePolicy policy_;
};

}  // namespace flowshop::oracles
