#include "flowshop/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flowshop/bench.hpp"
#include "flowshop/instance_io.hpp"
#include "flowshop/oracles.hpp"
#include "flowshop/solver.hpp"

namespace flowshop::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

void add_input_options(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("--input", opts.path, "Instance file ('-' for stdin)")
      ->required();
  cmd.add_option("--format", opts.format, "Instance format")
      ->check(CLI::IsMember({"auto", "text", "json"}));
}

InstanceFormat to_format(const std::string& name) {
  if (name == "text") return InstanceFormat::kText;
  if (name == "json") return InstanceFormat::kJson;
  return InstanceFormat::kAuto;
}

// Returns the exit code for the failure, or kExitOk with `instance` filled.
int load_instance(const InputOptions& opts, Instance& instance,
                  std::ostream& err) {
  std::string text;
  if (opts.path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(opts.path, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << opts.path << '\n';
      return kExitIo;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    instance = parse_instance(text, to_format(opts.format));
    validate(instance);
  } catch (const ParseError& e) {
    err << "error: " << opts.path << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: invalid instance: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

void print_trace(const std::vector<TraceStep>& trace, std::ostream& err) {
  err << "iter  makespan  pivot(id@pos)  delta_p  removed  contribution\n";
  for (const TraceStep& s : trace) {
    err << std::setw(4) << s.iteration << "  " << std::setw(8)
        << s.makespan_before << "  " << std::setw(7) << s.pivot_id << '@'
        << std::left << std::setw(5) << s.pivot_position << std::right << "  "
        << std::setw(7) << s.pivot_delta << "  " << std::setw(7)
        << s.removed_id << "  " << std::setw(12) << s.removed_contribution
        << '\n';
  }
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--sizes", "'" + item + "' is not a size");
    }
    if (used != item.size() || value < 1 || value != std::floor(value)) {
      throw CLI::ValidationError("--sizes", "'" + item + "' is not a size");
    }
    sizes.push_back(static_cast<std::size_t>(value));
  }
  if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) {
    throw CLI::ValidationError("--sizes", "sizes must be ascending");
  }
  return sizes;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered two-machine flow shop: common due date vs tardy jobs"};
  app.require_subcommand(1);

  InputOptions solve_in;
  std::string solve_output = "csv";
  std::string solver_name = "fast";
  std::string rule_name = "exact";
  bool with_trace = false;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the Pareto front");
  add_input_options(*solve_cmd, solve_in);
  solve_cmd->add_option("--output", solve_output, "Front format")
      ->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_option("--solver", solver_name, "Solver")
      ->check(CLI::IsMember({"fast", "quadratic"}));
  solve_cmd->add_option("--rule", rule_name, "Right-side contribution model")
      ->check(CLI::IsMember({"exact", "b-bound"}));
  solve_cmd->add_flag("--trace", with_trace, "Emit the per-iteration trace");

  InputOptions oracle_in;
  std::string oracle_output = "csv";
  std::size_t guard = oracles::kDefaultGuard;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force front over all subsets");
  add_input_options(*oracle_cmd, oracle_in);
  oracle_cmd->add_option("--guard", guard, "Largest n to enumerate")
      ->check(CLI::Range(std::size_t{0}, oracles::kHardGuard));
  oracle_cmd->add_option("--output", oracle_output, "Front format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::size_t gen_n = 0;
  std::int64_t gen_max_b = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "text";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "Number of jobs")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{0xFFFFFFFE}));
  gen_cmd->add_option("--max-b", gen_max_b, "Upper bound of b")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, kMaxTime));
  gen_cmd->add_option("--seed", gen_seed, "RNG seed");
  gen_cmd->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string bench_sizes;
  bench::Config bench_cfg;
  std::string bench_solver = "fast";
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers on doubling sizes");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated sizes")
      ->required();
  bench_cmd->add_option("--trials", bench_cfg.trials, "Trials per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench_cfg.seed, "RNG seed");
  bench_cmd->add_option("--max-b", bench_cfg.max_b, "Upper bound of b")
      ->check(CLI::Range(std::int64_t{1}, kMaxTime));
  bench_cmd->add_option("--solver", bench_solver, "Solver(s)")
      ->check(CLI::IsMember({"fast", "quadratic", "both"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    if (*bench_cmd) bench_cfg.sizes = parse_sizes(bench_sizes);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (*solve_cmd) {
    Instance instance;
    if (int code = load_instance(solve_in, instance, err); code != kExitOk) {
      return code;
    }
    const SelectionRule rule = rule_name == "exact" ? SelectionRule::kExact
                                                    : SelectionRule::kRightBound;
    const ParetoResult result = solver_name == "fast"
                                    ? solve(instance, rule)
                                    : oracles::pk_quadratic(instance, rule);
    if (solve_output == "csv") {
      out << write_front_csv(result.points);
      if (with_trace) print_trace(result.trace, err);
    } else {
      FrontJsonOptions opts{&result.removal_order,
                            with_trace ? &result.trace : nullptr};
      out << write_front_json(instance.name, instance.size(), result.points,
                              opts);
    }
    return kExitOk;
  }

  if (*oracle_cmd) {
    Instance instance;
    if (int code = load_instance(oracle_in, instance, err); code != kExitOk) {
      return code;
    }
    try {
      const auto points = oracles::brute_force_front(instance, guard);
      out << (oracle_output == "csv"
                  ? write_front_csv(points)
                  : write_front_json(instance.name, instance.size(), points));
    } catch (const oracles::GuardExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kExitGuard;
    }
    return kExitOk;
  }

  if (*gen_cmd) {
    const Instance instance = generate_instance(gen_n, gen_max_b, gen_seed);
    out << (gen_format == "text" ? write_text_instance(instance)
                                 : write_json_instance(instance));
    return kExitOk;
  }

  // bench
  if (bench_solver == "both") {
    bench_cfg.solvers = {bench::SolverKind::kFast,
                         bench::SolverKind::kQuadratic};
  } else if (bench_solver == "quadratic") {
    bench_cfg.solvers = {bench::SolverKind::kQuadratic};
  }
  const auto rows = bench::run(bench_cfg);
  out << bench::to_csv(rows);
  for (const auto& row : rows) {
    err << std::setw(10) << row.size << "  " << std::setw(9)
        << bench::to_string(row.solver) << "  " << std::fixed
        << std::setprecision(4) << row.median_seconds << " s";
    if (row.ratio) err << "  x" << std::setprecision(2) << *row.ratio;
    err << '\n';
  }
  return kExitOk;
}

}  // namespace flowshop::cli
