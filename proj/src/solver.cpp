#include "flowshop/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace flowshop {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::vector<std::int64_t> c_array(const Sequence& order) {
  std::vector<std::int64_t> c(order.size());
  std::int64_t prev_b = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    c[i] = order[i].a - prev_b;
    prev_b = order[i].b;
  }
  return c;
}

std::vector<std::int64_t> b_array(const Sequence& order) {
  std::vector<std::int64_t> b(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) b[i] = order[i].b;
  return b;
}

}  // namespace

SolverState::SolverState(const Instance& instance)
    : order_(spt_sort(instance)) {
  const std::size_t n = order_.size();
  alive_.assign(n + 2, 1);
  alive_[0] = 0;
  alive_[n + 1] = 0;
  left_.resize(n + 2);
  right_.resize(n + 2);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    left_[i] = i == 0 ? 0 : i - 1;
    right_[i] = i == n + 1 ? n + 1 : i + 1;
  }
  pred_jump_ = left_;
  succ_jump_ = right_;
  alive_count_ = n;
  for (const Job& job : order_) sum_b_ += job.b;
  tree_b_ = IndexedTree(b_array(order_), TiePolicy::kRightmost);
  tree_c_ = IndexedTree(c_array(order_), TiePolicy::kRightmost);
}

std::size_t SolverState::alive_predecessor(std::size_t position) {
  std::size_t root = position;
  while (root != 0 && !alive_[root]) root = pred_jump_[root];
  while (position != root) {
    const std::size_t next = pred_jump_[position];
    pred_jump_[position] = root;
    position = next;
  }
  return root;
}

std::size_t SolverState::alive_successor(std::size_t position) {
  const std::size_t end = size() + 1;
  std::size_t root = position;
  while (root != end && !alive_[root]) root = succ_jump_[root];
  while (position != root) {
    const std::size_t next = succ_jump_[position];
    succ_jump_[position] = root;
    position = next;
  }
  return root;
}

std::int64_t SolverState::makespan() const {
  if (alive_count_ == 0) return 0;
  return sum_b_ + tree_c_.max_prefix_sums(size()).value;
}

Pivot SolverState::find_pivot() {
  if (alive_count_ == 0) {
    throw std::logic_error("find_pivot: no alive jobs");
  }
  const Extremum best = tree_c_.max_prefix_sums(size());
  // A removed slot repeats the prefix sum of its alive predecessor.
  const std::size_t position =
      alive_[best.index] ? best.index : alive_predecessor(best.index);
  return {position, sum_b_ + best.value};
}

std::int64_t SolverState::pivot_contribution(std::size_t p) const {
  if (p == 0 || p > size() || !alive_[p]) {
    throw std::logic_error("pivot_contribution: position " +
                           std::to_string(p) + " is not alive");
  }
  const std::int64_t before = makespan();
  if (alive_count_ == 1) return before;

  // Evaluated without touching the trees: prefixes before p are unchanged
  // (slots p..r-1 then repeat P_{p-1}), and every prefix from r on shifts
  // by the change in c_p + c_r.
  const std::size_t n = size();
  const std::size_t l = left_[p];
  const std::size_t r = right_[p];
  std::int64_t best = p > 1 ? tree_c_.max_prefix_sums(p - 1).value : 0;
  if (r <= n) {
    const std::int64_t shift =
        job(r).a - b_at(l) - tree_c_.value(p) - tree_c_.value(r);
    best = std::max(best, tree_c_.max_prefix_sums(r, n).value + shift);
  }
  const std::int64_t after = sum_b_ - job(p).b + best;
  return before - after;
}

std::int64_t SolverState::path_slack(std::size_t m,
                                     std::int64_t pivot_value) const {
  const std::size_t next = right_[m];
  if (next > size()) return kUnbounded;
  const std::int64_t later = tree_c_.max_prefix_sums(next, size()).value;
  return job(m).a + pivot_value - later;
}

Removal SolverState::select_removal(std::size_t p, std::int64_t delta_p,
                                    SelectionRule rule) {
  const std::size_t n = size();
  const std::size_t last = left_[n + 1];
  if (p == last) return {p, delta_p};

  // Removed slots hold b = 0 and alive jobs have b >= 1.
  const Extremum widest = tree_b_.suffix_max(p + 1);
  if (rule == SelectionRule::kRightBound) {
    if (widest.value >= delta_p) return {widest.index, widest.value};
    return {p, delta_p};
  }

  // Right of the pivot, removing m drops the makespan by
  // min(b_m, slack(m)); slack is non-decreasing in m and the suffix max of b
  // is non-increasing, so the best value sits at their crossing.
  // p attains the global maximum prefix sum.
  const std::int64_t pivot_value = tree_c_.max_prefix_sums(n).value;
  const auto slack = [&](std::size_t m) { return path_slack(m, pivot_value); };

  std::int64_t best = widest.value;
  if (slack(widest.index) < widest.value) {
    // Largest alive m with slack(m) <= suffix_max_b(m). Holds at the widest
    // job, fails at the last job.
    std::size_t lo = widest.index;
    std::size_t hi = last;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const std::size_t m = alive_successor(mid);
      if (m != hi && slack(m) <= tree_b_.suffix_max(m).value) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    best = std::max(slack(lo), tree_b_.suffix_max(right_[lo]).value);
  }
  if (best < delta_p) return {p, delta_p};
  // Maximisers are exactly the jobs with b >= best right of the crossing;
  // the rightmost job with b >= best is one of them.
  return {tree_b_.last_at_least(p + 1, n, best), best};
}

void SolverState::remove_job(std::size_t position) {
  if (position == 0 || position > size() || !alive_[position]) {
    throw std::logic_error("remove_job: position " + std::to_string(position) +
                           " is not alive");
  }
  const std::size_t l = left_[position];
  const std::size_t r = right_[position];
  tree_b_.set(position, 0);
  sum_b_ -= job(position).b;
  if (r <= size()) tree_c_.set(r, job(r).a - b_at(l));
  tree_c_.set(position, 0);
  right_[l] = r;
  left_[r] = l;
  alive_[position] = 0;
  pred_jump_[position] = l;
  succ_jump_[position] = r;
  --alive_count_;
}

ParetoResult solve(const Instance& instance, SelectionRule rule) {
  validate(instance);
  SolverState state(instance);
  const std::size_t n = state.size();

  ParetoResult result;
  result.points.reserve(n + 1);
  result.removal_order.reserve(n);
  result.trace.reserve(n);
  result.points.push_back({n, 0, state.makespan()});

  for (std::size_t iteration = 1; iteration <= n; ++iteration) {
    const Pivot pivot = state.find_pivot();
    const std::int64_t delta = state.pivot_contribution(pivot.position);
    const Removal removal = state.select_removal(pivot.position, delta, rule);
    const JobId pivot_id = state.job(pivot.position).id;
    const JobId removed_id = state.job(removal.position).id;
    state.remove_job(removal.position);
    const std::int64_t after = state.makespan();

    result.trace.push_back({iteration, pivot.makespan, pivot_id,
                            pivot.position, delta, removed_id,
                            pivot.makespan - after});
    result.removal_order.push_back(removed_id);
    result.points.push_back({n - iteration, iteration, after});
  }
  return result;
}

Sequence schedule_for_k(const ParetoResult& result, const Instance& instance,
                        std::size_t k) {
  const std::size_t n = instance.size();
  if (k > n || result.removal_order.size() != n) {
    throw std::out_of_range("schedule_for_k: k = " + std::to_string(k) +
                            " outside [0, " + std::to_string(n) + "]");
  }
  std::unordered_map<std::uint32_t, const Job*> by_id;
  for (const Job& job : instance.jobs) by_id.emplace(job.id.value, &job);

  const std::size_t removed = n - k;
  std::unordered_set<std::uint32_t> tardy;
  for (std::size_t i = 0; i < removed; ++i) {
    tardy.insert(result.removal_order[i].value);
  }
  Sequence seq;
  seq.reserve(n);
  for (const Job& job : instance.jobs) {
    if (!tardy.contains(job.id.value)) seq.push_back(job);
  }
  spt_sort_in_place(seq);
  for (std::size_t i = 0; i < removed; ++i) {
    seq.push_back(*by_id.at(result.removal_order[i].value));
  }
  return seq;
}

}  // namespace flowshop
