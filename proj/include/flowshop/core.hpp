#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowshop {

/// External job identifier: 1..n in input order.
struct JobId {
  std::uint32_t value = 0;

  friend auto operator<=>(const JobId&, const JobId&) = default;
  friend std::ostream& operator<<(std::ostream& os, JobId id) {
    return os << id.value;
  }
};

/// One job of the ordered two-machine flow shop: `a` on M1, then `b` on M2.
struct Job {
  JobId id;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
  std::string name;
  std::vector<Job> jobs;

  std::size_t size() const { return jobs.size(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// An ordered selection of jobs; any permutation of a subset of an instance.
using Sequence = std::vector<Job>;

/// Largest admissible processing time (times fit 32-bit unsigned).
inline constexpr std::int64_t kMaxTime = 0xFFFFFFFFLL;
/// n * max(b) must stay below this so every partial sum fits int64.
inline constexpr std::int64_t kSumHeadroom = std::int64_t{1} << 62;

class ValidationError : public std::runtime_error {
 public:
  enum class Kind { kEmpty, kNonPositiveTime, kOrderViolation, kOverflow, kDuplicateId };

  ValidationError(Kind kind, JobId id, const std::string& what)
      : std::runtime_error(what), kind_(kind), id_(id) {}

  Kind kind() const { return kind_; }
  /// Offending job; JobId{0} for instance-level failures.
  JobId id() const { return id_; }

 private:
  Kind kind_;
  JobId id_;
};

/// Throws ValidationError for the first job (in input order) that breaks
/// 1 <= a <= b <= kMaxTime, for duplicate ids, for an empty instance, or when
/// n * max(b) reaches kSumHeadroom.
void validate(const Instance& instance);

/// Non-decreasing a, then b, then id. This is the Johnson order when every
/// job has a <= b.
Sequence spt_sort(const Instance& instance);
void spt_sort_in_place(std::span<Job> jobs);
bool spt_less(const Job& lhs, const Job& rhs);

/// Completion time on M2 of the last job, by direct simulation of the two
/// machines. Any order is accepted; 0 for an empty sequence.
std::int64_t simulate_makespan(std::span<const Job> seq);

struct MakespanReport {
  std::int64_t cmax = 0;
  /// 1-based position where the critical path turns, rightmost among ties.
  /// 0 for an empty sequence.
  std::size_t pivot_position = 0;
  std::vector<std::int64_t> c_values;
};

/// Longest-path form: cmax = sum(b) + max_k sum_{i<=k} c_i with
/// c_i = a_i - b_{i-1}, b_0 = 0.
MakespanReport formula_makespan(std::span<const Job> seq);

}  // namespace flowshop
