#include "flowshop/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace flowshop {

namespace {

std::string job_label(JobId id) { return "job " + std::to_string(id.value); }

}  // namespace

void validate(const Instance& instance) {
  using Kind = ValidationError::Kind;
  if (instance.jobs.empty()) {
    throw ValidationError(Kind::kEmpty, JobId{}, "instance has no jobs");
  }
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(instance.jobs.size());
  std::int64_t max_b = 0;
  for (const Job& job : instance.jobs) {
    if (!seen.insert(job.id.value).second) {
      throw ValidationError(Kind::kDuplicateId, job.id,
                            job_label(job.id) + ": duplicate id");
    }
    if (job.a < 1 || job.b < 1) {
      throw ValidationError(Kind::kNonPositiveTime, job.id,
                            job_label(job.id) +
                                ": processing times must be >= 1");
    }
    if (job.a > kMaxTime || job.b > kMaxTime) {
      throw ValidationError(Kind::kOverflow, job.id,
                            job_label(job.id) +
                                ": processing time exceeds 2^32 - 1");
    }
    if (job.a > job.b) {
      throw ValidationError(Kind::kOrderViolation, job.id,
                            job_label(job.id) + ": a > b (a = " +
                                std::to_string(job.a) +
                                ", b = " + std::to_string(job.b) + ")");
    }
    max_b = std::max(max_b, job.b);
  }
  const auto n = static_cast<std::int64_t>(instance.jobs.size());
  if (max_b > (kSumHeadroom - 1) / n) {
    throw ValidationError(Kind::kOverflow, JobId{},
                          "n * max(b) exceeds the 2^62 headroom bound");
  }
}

bool spt_less(const Job& lhs, const Job& rhs) {
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  return lhs.id < rhs.id;
}

void spt_sort_in_place(std::span<Job> jobs) {
  std::sort(jobs.begin(), jobs.end(), spt_less);
}

Sequence spt_sort(const Instance& instance) {
  Sequence seq = instance.jobs;
  spt_sort_in_place(seq);
  return seq;
}

std::int64_t simulate_makespan(std::span<const Job> seq) {
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
  for (const Job& job : seq) {
    m1 += job.a;
    m2 = std::max(m1, m2) + job.b;
  }
  return m2;
}

MakespanReport formula_makespan(std::span<const Job> seq) {
  MakespanReport report;
  if (seq.empty()) return report;
  report.c_values.reserve(seq.size());
  std::int64_t sum_b = 0;
  std::int64_t prev_b = 0;
  std::int64_t prefix = 0;
  std::int64_t best = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::int64_t c = seq[i].a - prev_b;
    report.c_values.push_back(c);
    prefix += c;
    if (i == 0 || prefix >= best) {
      best = prefix;
      report.pivot_position = i + 1;
    }
    prev_b = seq[i].b;
    sum_b += seq[i].b;
  }
  report.cmax = sum_b + best;
  return report;
}

}  // namespace flowshop
