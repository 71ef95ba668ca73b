#include "flowshop/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "json.hpp"

namespace flowshop {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::int64_t parse_integer(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": '" +
                         std::string(field) + "' is not an integer",
                     line);
  }
  return value;
}

void sort_points_descending(std::vector<ParetoPoint>& points) {
  std::sort(points.begin(), points.end(),
            [](const ParetoPoint& x, const ParetoPoint& y) {
              return x.retained > y.retained;
            });
}

}  // namespace

Instance parse_text_instance(std::string_view text) {
  constexpr std::string_view kNameTag = "# name:";
  Instance instance;
  bool have_count = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!have_count && line.starts_with(kNameTag)) {
        instance.name = std::string(trim(line.substr(kNameTag.size())));
      }
      continue;
    }
    last_line = line_no;
    const auto fields = split_fields(line);
    if (!have_count) {
      if (fields.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected the job count",
                         line_no);
      }
      const std::int64_t n = parse_integer(fields[0], line_no);
      if (n < 1) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": job count must be >= 1",
                         line_no);
      }
      expected = static_cast<std::size_t>(n);
      instance.jobs.reserve(std::min<std::size_t>(expected, 1U << 20));
      have_count = true;
      continue;
    }
    if (instance.jobs.size() == expected) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": more than " + std::to_string(expected) + " jobs",
                       line_no);
    }
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two fields 'a b'",
                       line_no);
    }
    const auto id = static_cast<std::uint32_t>(instance.jobs.size() + 1);
    instance.jobs.push_back({JobId{id}, parse_integer(fields[0], line_no),
                             parse_integer(fields[1], line_no)});
  }
  if (!have_count) throw ParseError("empty instance file", line_no);
  if (instance.jobs.size() != expected) {
    throw ParseError("line " + std::to_string(last_line) + ": expected " +
                         std::to_string(expected) + " jobs, found " +
                         std::to_string(instance.jobs.size()),
                     last_line);
  }
  return instance;
}

Instance parse_json_instance(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("JSON instance must be an object");
  Instance instance;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("\"name\" must be a string");
    instance.name = it->get<std::string>();
  }
  const auto jobs = doc.find("jobs");
  if (jobs == doc.end() || !jobs->is_array()) {
    throw ParseError("\"jobs\" must be an array of [a, b] pairs");
  }
  if (jobs->empty()) throw ParseError("\"jobs\" is empty");
  instance.jobs.reserve(jobs->size());
  for (std::size_t i = 0; i < jobs->size(); ++i) {
    const auto& pair = (*jobs)[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw ParseError("jobs[" + std::to_string(i) +
                       "]: expected an [a, b] pair of integers");
    }
    instance.jobs.push_back({JobId{static_cast<std::uint32_t>(i + 1)},
                             pair[0].get<std::int64_t>(),
                             pair[1].get<std::int64_t>()});
  }
  return instance;
}

Instance parse_instance(std::string_view text, InstanceFormat format) {
  if (format == InstanceFormat::kAuto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{'
                 ? InstanceFormat::kJson
                 : InstanceFormat::kText;
  }
  return format == InstanceFormat::kJson ? parse_json_instance(text)
                                         : parse_text_instance(text);
}

std::string write_text_instance(const Instance& instance) {
  std::ostringstream os;
  if (!instance.name.empty()) os << "# name: " << instance.name << '\n';
  os << instance.jobs.size() << '\n';
  for (const Job& job : instance.jobs) os << job.a << ' ' << job.b << '\n';
  return os.str();
}

std::string write_json_instance(const Instance& instance) {
  ordered_json doc;
  doc["name"] = instance.name;
  auto& jobs = doc["jobs"] = ordered_json::array();
  for (const Job& job : instance.jobs) jobs.push_back({job.a, job.b});
  return doc.dump() + "\n";
}

Instance generate_instance(std::size_t n, std::int64_t max_b,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance instance;
  instance.name = "gen mt19937_64 n=" + std::to_string(n) +
                  " max-b=" + std::to_string(max_b) +
                  " seed=" + std::to_string(seed);
  instance.jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t b =
        std::uniform_int_distribution<std::int64_t>(1, max_b)(rng);
    const std::int64_t a =
        std::uniform_int_distribution<std::int64_t>(1, b)(rng);
    instance.jobs.push_back({JobId{static_cast<std::uint32_t>(i + 1)}, a, b});
  }
  return instance;
}

std::string write_front_csv(std::vector<ParetoPoint> points) {
  sort_points_descending(points);
  std::string out = "retained,tardy,due_date\n";
  for (const ParetoPoint& p : points) {
    out += std::to_string(p.retained) + ',' + std::to_string(p.tardy) + ',' +
           std::to_string(p.due_date) + '\n';
  }
  return out;
}

std::string write_front_json(const std::string& instance_name, std::size_t n,
                             std::vector<ParetoPoint> points,
                             FrontJsonOptions options) {
  sort_points_descending(points);
  ordered_json doc;
  doc["instance_name"] = instance_name;
  doc["n"] = n;
  auto& arr = doc["points"] = ordered_json::array();
  for (const ParetoPoint& p : points) {
    arr.push_back({{"retained", p.retained},
                   {"tardy", p.tardy},
                   {"due_date", p.due_date}});
  }
  if (options.removal_order != nullptr) {
    auto& order = doc["removal_order"] = ordered_json::array();
    for (JobId id : *options.removal_order) order.push_back(id.value);
  }
  if (options.trace != nullptr) {
    auto& trace = doc["trace"] = ordered_json::array();
    for (const TraceStep& s : *options.trace) {
      trace.push_back({{"iteration", s.iteration},
                       {"makespan_before", s.makespan_before},
                       {"pivot_id", s.pivot_id.value},
                       {"pivot_delta", s.pivot_delta},
                       {"removed_id", s.removed_id.value},
                       {"removed_contribution", s.removed_contribution}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace flowshop
