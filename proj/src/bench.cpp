#include "flowshop/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "flowshop/instance_io.hpp"
#include "flowshop/oracles.hpp"
#include "flowshop/solver.hpp"

namespace flowshop::bench {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

std::string to_string(SolverKind kind) {
  return kind == SolverKind::kFast ? "fast" : "quadratic";
}

double median_solve_seconds(SolverKind solver, std::size_t n,
                            std::size_t trials, std::uint64_t seed,
                            std::int64_t max_b) {
  if (trials == 0 || n == 0) {
    throw std::invalid_argument("bench: need n >= 1 and trials >= 1");
  }
  std::vector<double> times;
  times.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const Instance instance = generate_instance(n, max_b, trial_seed(seed, n, t));
    const auto start = std::chrono::steady_clock::now();
    const ParetoResult result = solver == SolverKind::kFast
                                    ? solve(instance)
                                    : oracles::pk_quadratic(instance);
    const auto stop = std::chrono::steady_clock::now();
    if (result.points.size() != n + 1) throw std::logic_error("bench: bad front");
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  return times.size() % 2 == 1 ? times[mid]
                               : 0.5 * (times[mid - 1] + times[mid]);
}

std::vector<Row> run(const Config& config) {
  if (config.sizes.empty() ||
      !std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw std::invalid_argument("bench: sizes must be non-empty and ascending");
  }
  std::vector<Row> rows;
  for (SolverKind solver : config.solvers) {
    std::optional<double> previous;
    for (std::size_t n : config.sizes) {
      Row row{n, solver,
              median_solve_seconds(solver, n, config.trials, config.seed,
                                   config.max_b),
              std::nullopt};
      if (previous && *previous > 0.0) row.ratio = row.median_seconds / *previous;
      previous = row.median_seconds;
      rows.push_back(row);
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& x, const Row& y) { return x.size < y.size; });
  return rows;
}

std::string to_csv(const std::vector<Row>& rows) {
  std::string out = "size,solver,median_seconds,ratio\n";
  char buf[64];
  for (const Row& row : rows) {
    out += std::to_string(row.size) + ',' + to_string(row.solver) + ',';
    std::snprintf(buf, sizeof buf, "%.6f", row.median_seconds);
    out += buf;
    out += ',';
    if (row.ratio) {
      std::snprintf(buf, sizeof buf, "%.3f", *row.ratio);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace flowshop::bench
