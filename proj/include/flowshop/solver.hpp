#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/indexed_tree.hpp"
#include "flowshop/pareto.hpp"

namespace flowshop {

struct Pivot {
  std::size_t position = 0;
  std::int64_t makespan = 0;
};

/// A chosen removal and the makespan drop it causes.
struct Removal {
  std::size_t position = 0;
  std::int64_t contribution = 0;
};

/// Mutable state of the greedy over the SPT order of an instance.
///
/// Positions are 1..n in SPT order and never renumber; removed positions stay
/// in both trees with leaf value 0. Alive positions form a doubly linked list
/// with sentinels 0 and n + 1.
class SolverState {
 public:
  /// Requires a validated instance.
  explicit SolverState(const Instance& instance);

  std::size_t size() const { return order_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool alive(std::size_t position) const { return alive_[position]; }
  const Job& job(std::size_t position) const { return order_[position - 1]; }
  std::int64_t sum_b() const { return sum_b_; }
  const IndexedTree& c_tree() const { return tree_c_; }
  const IndexedTree& b_tree() const { return tree_b_; }
  /// Nearest alive position before / after `position` (0 / n + 1 if none).
  std::size_t left(std::size_t position) const { return left_[position]; }
  std::size_t right(std::size_t position) const { return right_[position]; }

  /// Makespan of the alive jobs in SPT order.
  std::int64_t makespan() const;

  /// Rightmost alive position where the critical path turns, with the
  /// current makespan. Requires at least one alive job.
  Pivot find_pivot();

  /// Makespan drop if the alive job at `p` were removed. Read-only: derived
  /// from two prefix-maximum queries on the c-tree.
  std::int64_t pivot_contribution(std::size_t p) const;

  /// The job to remove given pivot `p` and its contribution. On a tie between
  /// the pivot and the best right-side job the right-side job wins; among
  /// right-side jobs the rightmost maximiser wins.
  Removal select_removal(std::size_t p, std::int64_t delta_p,
                         SelectionRule rule = SelectionRule::kExact);

  void remove_job(std::size_t position);

 private:
  std::size_t alive_predecessor(std::size_t position);
  std::size_t alive_successor(std::size_t position);
  std::int64_t b_at(std::size_t position) const {
    return position == 0 ? 0 : order_[position - 1].b;
  }
  /// a_m + value(pivot) - max prefix sum over alive k > m; the exact drop
  /// of removing m is min(b_m, this). Saturates when m is the last job.
  std::int64_t path_slack(std::size_t m, std::int64_t pivot_value) const;

  Sequence order_;
  std::vector<char> alive_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> pred_jump_;
  std::vector<std::size_t> succ_jump_;
  std::size_t alive_count_ = 0;
  std::int64_t sum_b_ = 0;
  IndexedTree tree_b_;
  IndexedTree tree_c_;
};

/// Full Pareto front by repeatedly removing the job of largest contribution.
/// O(n log n) in the common case; a selection step that has to search the
/// right side costs O(log^2 n). Throws ValidationError on invalid input.
ParetoResult solve(const Instance& instance,
                   SelectionRule rule = SelectionRule::kExact);

/// The k retained jobs in SPT order followed by the n - k tardy jobs in
/// removal order. Throws std::out_of_range if k > n.
Sequence schedule_for_k(const ParetoResult& result, const Instance& instance,
                        std::size_t k);

}  // namespace flowshop
