#include "flowshop/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

namespace flowshop::oracles {

namespace {

struct Slot {
  std::int64_t a;
  std::int64_t b;
  std::uint32_t position;  // 1-based SPT slot in the full instance
  JobId id;
};

// Makespan of `jobs` with index `skip` left out, by machine simulation.
std::int64_t simulate_without(const std::vector<Slot>& jobs, std::size_t skip) {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (i == skip) continue;
    m1 += jobs[i].a;
    m2 = std::max(m1, m2) + jobs[i].b;
  }
  return m2;
}

}  // namespace

ParetoResult pk_quadratic(const Instance& instance, SelectionRule rule) {
  validate(instance);
  const Sequence order = spt_sort(instance);
  const std::size_t n = order.size();
  std::vector<Slot> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    jobs.push_back({order[i].a, order[i].b, static_cast<std::uint32_t>(i + 1),
                    order[i].id});
  }

  ParetoResult result;
  std::vector<std::int64_t> prefix(n);
  result.points.push_back({n, 0, simulate_without(jobs, n)});

  for (std::size_t iteration = 1; iteration <= n; ++iteration) {
    const std::size_t m = jobs.size();

    // Prefix sums of c and the rightmost maximiser.
    std::int64_t sum_b = 0;
    std::int64_t running = 0;
    std::int64_t prev_b = 0;
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
      running += jobs[i].a - prev_b;
      prev_b = jobs[i].b;
      sum_b += jobs[i].b;
      prefix[i] = running;
      if (running >= prefix[p]) p = i;
    }
    const std::int64_t makespan = sum_b + prefix[p];
    const std::int64_t delta_p = makespan - simulate_without(jobs, p);

    // Best job right of the pivot, rightmost among equals.
    std::size_t best = m;
    std::int64_t best_value = std::numeric_limits<std::int64_t>::min();
    if (rule == SelectionRule::kExact) {
      std::int64_t later = std::numeric_limits<std::int64_t>::min();
      for (std::size_t j = m; j-- > p + 1;) {
        const std::int64_t value =
            j + 1 == m ? jobs[j].b
                       : std::min(jobs[j].b, jobs[j].a + prefix[p] - later);
        if (value > best_value) {
          best_value = value;
          best = j;
        }
        later = std::max(later, prefix[j]);
      }
    } else {
      for (std::size_t j = m; j-- > p + 1;) {
        if (jobs[j].b > best_value) {
          best_value = jobs[j].b;
          best = j;
        }
      }
    }
    const std::size_t chosen = best < m && best_value >= delta_p ? best : p;

    const Slot pivot = jobs[p];
    const Slot removed = jobs[chosen];
    jobs.erase(jobs.begin() + static_cast<std::ptrdiff_t>(chosen));
    result.trace.push_back({iteration, makespan, pivot.id, pivot.position,
                            delta_p, removed.id, 0});
    result.removal_order.push_back(removed.id);
    result.points.push_back({n - iteration, iteration, 0});
  }
  // Each scan measured the makespan left by the previous removal.
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t after = k + 1 < n ? result.trace[k + 1].makespan_before : 0;
    result.points[k + 1].due_date = after;
    result.trace[k].removed_contribution = result.trace[k].makespan_before - after;
  }
  return result;
}

std::vector<ParetoPoint> brute_force_front(const Instance& instance,
                                           std::size_t guard) {
  const std::size_t n = instance.size();
  const std::size_t limit = std::min(guard, kHardGuard);
  if (n > limit) {
    throw GuardExceeded("brute force refused: n = " + std::to_string(n) +
                        " exceeds guard " + std::to_string(limit));
  }
  const Sequence order = spt_sort(instance);
  std::vector<std::int64_t> best(n + 1, std::numeric_limits<std::int64_t>::max());
  best[0] = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) continue;
      m1 += order[i].a;
      m2 = std::max(m1, m2) + order[i].b;
    }
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    best[k] = std::min(best[k], m2);
  }
  std::vector<ParetoPoint> points;
  points.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) points.push_back({k, n - k, best[k]});
  return points;
}

void NaiveArray::check_range(std::size_t l, std::size_t r) const {
  if (l == 0 || l > r || r > values_.size()) {
    throw std::out_of_range("NaiveArray: bad range");
  }
}

std::int64_t NaiveArray::value(std::size_t i) const {
  check_range(i, i);
  return values_[i - 1];
}

void NaiveArray::add(std::size_t i, std::int64_t x) {
  check_range(i, i);
  values_[i - 1] += x;
}

void NaiveArray::set(std::size_t i, std::int64_t v) {
  check_range(i, i);
  values_[i - 1] = v;
}

std::int64_t NaiveArray::prefix_sum(std::size_t i) const {
  if (i > values_.size()) throw std::out_of_range("NaiveArray: bad index");
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < i; ++k) sum += values_[k];
  return sum;
}

template <typename Better>
Extremum NaiveArray::scan(std::size_t l, std::size_t r, bool partial_sums,
                          Better better) const {
  check_range(l, r);
  std::int64_t running = prefix_sum(l - 1);
  Extremum best{0, 0};
  for (std::size_t k = l; k <= r; ++k) {
    running += values_[k - 1];
    const std::int64_t v = partial_sums ? running : values_[k - 1];
    const bool take = best.index == 0 || better(v, best.value) ||
                      (v == best.value && policy_ == TiePolicy::kRightmost);
    if (take) best = {v, k};
  }
  return best;
}

Extremum NaiveArray::range_max(std::size_t l, std::size_t r) const {
  return scan(l, r, false, std::greater<>{});
}

Extremum NaiveArray::range_min(std::size_t l, std::size_t r) const {
  return scan(l, r, false, std::less<>{});
}

Extremum NaiveArray::max_prefix_sums(std::size_t i) const {
  if (i == 0) return {};
  return scan(1, i, true, std::greater<>{});
}

Extremum NaiveArray::min_prefix_sums(std::size_t i) const {
  if (i == 0) return {};
  return scan(1, i, true, std::less<>{});
}

Extremum NaiveArray::max_prefix_sums(std::size_t l, std::size_t r) const {
  return scan(l, r, true, std::greater<>{});
}

Extremum NaiveArray::min_prefix_sums(std::size_t l, std::size_t r) const {
  return scan(l, r, true, std::less<>{});
}

std::size_t NaiveArray::last_at_least(std::size_t l, std::size_t r,
                                      std::int64_t threshold) const {
  check_range(l, r);
  for (std::size_t k = r; k >= l; --k) {
    if (values_[k - 1] >= threshold) return k;
  }
  return 0;
}

}  // namespace flowshop::oracles
