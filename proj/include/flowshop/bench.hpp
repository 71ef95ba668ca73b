#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flowshop::bench {

enum class SolverKind { kFast, kQuadratic };

std::string to_string(SolverKind kind);

struct Config {
  std::vector<std::size_t> sizes;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  std::int64_t max_b = 1000;
  std::vector<SolverKind> solvers{SolverKind::kFast};
};

struct Row {
  std::size_t size = 0;
  SolverKind solver = SolverKind::kFast;
  double median_seconds = 0.0;
  /// median / median at the previous size for the same solver.
  std::optional<double> ratio;
};

/// Median wall time of one solve over `trials` generated instances of size n.
/// Only the solve call is timed (steady clock); generation is excluded.
double median_solve_seconds(SolverKind solver, std::size_t n,
                            std::size_t trials, std::uint64_t seed,
                            std::int64_t max_b = 1000);

/// One row per (size, solver), sizes in the given (ascending) order.
std::vector<Row> run(const Config& config);

std::string to_csv(const std::vector<Row>& rows);

}  // namespace flowshop::bench
