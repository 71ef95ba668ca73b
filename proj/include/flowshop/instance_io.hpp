#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flowshop/core.hpp"
#include "flowshop/pareto.hpp"

namespace flowshop {

class ParseError : public std::runtime_error {
 public:
  /// `line` is 1-based; 0 when the failure has no line (JSON elements).
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class InstanceFormat { kAuto, kText, kJson };

/// Text form: first content line n, then n lines "a b". Blank lines and lines
/// starting with '#' are ignored; "# name: <label>" before the count sets the
/// instance name. Job ids are 1..n in file order.
Instance parse_text_instance(std::string_view text);
/// JSON form: {"name": optional string, "jobs": [[a, b], ...]}.
Instance parse_json_instance(std::string_view text);
/// kAuto picks JSON when the first non-blank character is '{'.
Instance parse_instance(std::string_view text,
                        InstanceFormat format = InstanceFormat::kAuto);

std::string write_text_instance(const Instance& instance);
std::string write_json_instance(const Instance& instance);

/// b uniform in [1, max_b], then a uniform in [1, b]; deterministic in the
/// arguments. The name records the generator and its parameters.
Instance generate_instance(std::size_t n, std::int64_t max_b,
                           std::uint64_t seed);

/// CSV `retained,tardy,due_date`, one row per point, retained = n..0.
std::string write_front_csv(std::vector<ParetoPoint> points);

struct FrontJsonOptions {
  const std::vector<JobId>* removal_order = nullptr;
  const std::vector<TraceStep>* trace = nullptr;
};
std::string write_front_json(const std::string& instance_name, std::size_t n,
                             std::vector<ParetoPoint> points,
                             FrontJsonOptions options = {});

}  // namespace flowshop
