#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>

#include "flowshop/core.hpp"

namespace flowshop::testing {

inline Instance instance_of(
    std::initializer_list<std::pair<std::int64_t, std::int64_t>> ab) {
  Instance inst;
  std::uint32_t id = 1;
  for (auto [a, b] : ab) inst.jobs.push_back({JobId{id++}, a, b});
  return inst;
}

/// b uniform in [1, max_b], a uniform in [1, b].
inline Instance random_instance(std::mt19937_64& rng, std::size_t n,
                                std::int64_t max_b) {
  Instance inst;
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = std::uniform_int_distribution<std::int64_t>(1, max_b)(rng);
    const auto a = std::uniform_int_distribution<std::int64_t>(1, b)(rng);
    inst.jobs.push_back({JobId{static_cast<std::uint32_t>(i + 1)}, a, b});
  }
  return inst;
}

/// Makespan drop from deleting seq[skip], by full re-simulation.
inline std::int64_t recomputed_drop(const Sequence& seq, std::size_t skip) {
  Sequence without;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != skip) without.push_back(seq[i]);
  }
  return simulate_makespan(seq) - simulate_makespan(without);
}

}  // namespace flowshop::testing
