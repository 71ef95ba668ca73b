#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flowshop/core.hpp"

namespace flowshop {

/// How the greedy values a job right of the pivot.
enum class SelectionRule {
  /// Exact makespan drop of every candidate. Yields the optimal front.
  kExact,
  /// Values a right-side job by its b alone, as in the original greedy
  /// statement. Can overestimate and produce a non-optimal front.
  kRightBound,
};

/// One Pareto optimum of (due date, tardy jobs).
struct ParetoPoint {
  std::size_t retained = 0;
  std::size_t tardy = 0;
  std::int64_t due_date = 0;

  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

/// One greedy iteration. Positions are 1-based slots of the SPT order of the
/// full instance.
struct TraceStep {
  std::size_t iteration = 0;
  std::int64_t makespan_before = 0;
  JobId pivot_id;
  std::size_t pivot_position = 0;
  std::int64_t pivot_delta = 0;
  JobId removed_id;
  /// makespan_before minus the makespan after the removal.
  std::int64_t removed_contribution = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ParetoResult {
  /// n + 1 points, retained = n down to 0.
  std::vector<ParetoPoint> points;
  std::vector<JobId> removal_order;
  std::vector<TraceStep> trace;

  friend bool operator==(const ParetoResult&, const ParetoResult&) = default;
};

}  // namespace flowshop
