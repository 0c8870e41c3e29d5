// eco: run benchmark experiments, evaluate single points, list problems.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eco/classic.hpp"
#include "eco/engineering.hpp"
#include "eco/harness.hpp"

namespace {

using namespace eco;
using harness::format_number;

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 1;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Point parse_point(const std::string& text) {
  Point x;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
    x.push_back(v);
  }
  if (x.empty()) throw std::invalid_argument("empty point");
  return x;
}

int cmd_list() {
  std::printf("%-6s %-12s %4s  %-15s %s\n", "id", "suite", "dim", "known_optimum", "description");
  for (auto suite : {harness::Suite::classic, harness::Suite::engineering}) {
    for (const auto& id : harness::suite_ids(suite)) {
      const auto entry = harness::lookup(id, 30);
      const auto& p = entry.problem;
      const bool fixed = suite == harness::Suite::engineering ||
                         classic::make_classic(*classic::parse_id(id), 1).fixed_dim.has_value();
      const std::string dim = fixed ? std::to_string(p.dim()) : "D";
      const std::string opt = p.known_optimum ? format_number(*p.known_optimum) : "-";
      std::printf("%-6s %-12s %4s  %-15s %s\n", id.c_str(), harness::to_string(suite).c_str(),
                  dim.c_str(), opt.c_str(), p.description.c_str());
    }
  }
  return 0;
}

int cmd_eval(const std::string& id, const std::string& point_text) {
  const Point x = parse_point(point_text);
  const auto entry = harness::lookup(id, x.size());
  const auto& p = entry.problem;
  if (x.size() != p.dim()) {
    std::cerr << "error: " << id << " expects " << p.dim() << " coordinates, got " << x.size() << '\n';
    return kUsageError;
  }
  const auto eval = evaluate_unbudgeted(p, x);
  std::cout << "problem " << entry.id << '\n';
  std::cout << "value " << format_number(eval.value) << '\n';
  std::cout << "violation " << format_number(eval.violation) << '\n';
  std::cout << "feasible " << (eval.feasible() ? "yes" : "no") << '\n';
  if (p.noisy()) std::cout << "note noise term omitted\n";
  for (const auto& g : engineering::constraint_report(p, x)) {
    std::cout << 'g' << g.index << ' ' << format_number(g.value) << ' '
              << (g.satisfied ? "satisfied" : "violated") << '\n';
  }
  return 0;
}

void print_summary(const harness::ExperimentReport& report) {
  std::printf("%-8s %-5s %-16s %-16s %-16s %s\n", "problem", "alg", "min", "ave", "std", "feasible");
  for (const auto& row : report.summary) {
    std::printf("%-8s %-5s %-16s %-16s %-16s %s\n", row.problem.c_str(),
                harness::to_string(row.algorithm).c_str(), format_number(row.summary.min).c_str(),
                format_number(row.summary.ave).c_str(), format_number(row.summary.std).c_str(),
                format_number(row.feasible_rate).c_str());
  }
  for (const auto& row : report.pairwise) {
    std::printf("wilcoxon %s %s vs %s p=%s %s\n", row.problem.c_str(),
                harness::to_string(row.reference).c_str(), harness::to_string(row.opponent).c_str(),
                format_number(row.verdict.p_value).c_str(), analysis::symbol(row.verdict.verdict));
  }
  if (report.friedman) {
    std::printf("friedman statistic=%s p=%s\n", format_number(report.friedman->statistic).c_str(),
                format_number(report.friedman->p_value).c_str());
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
      std::printf("  mean rank %s %s\n", harness::to_string(report.algorithms[a]).c_str(),
                  format_number(report.friedman->mean_ranks[a]).c_str());
    }
  }
  double wall = 0.0;
  for (const auto& r : report.records) wall += r.wall_seconds;
  std::printf("runs %zu, total run time %s s\n", report.records.size(), format_number(wall).c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ecological cycle optimizer benchmark harness"};
  app.require_subcommand(1);

  std::string suite_name = "classic";
  std::string alg_list = "eco";
  std::string problem_list;
  std::vector<std::size_t> dims{30};
  std::size_t runs = 25;
  std::uint64_t seed = 7;
  std::size_t max_fes = 0;
  std::string out_dir;
  unsigned threads = 0;
  bool timing = false;
  bool no_traces = false;

  auto* run = app.add_subcommand("run", "run an experiment and write report files");
  run->add_option("--suite", suite_name, "classic | engineering | single")->capture_default_str();
  run->add_option("--alg", alg_list, "comma-separated algorithms: eco, pso")->capture_default_str();
  run->add_option("--problems", problem_list, "comma-separated problem ids (default: whole suite)");
  run->add_option("--dim", dims, "dimension(s) of the variable-dimension classic functions")
      ->delimiter(',')
      ->capture_default_str();
  run->add_option("--runs", runs, "independent runs per problem and algorithm")->capture_default_str();
  run->add_option("--seed", seed, "base seed; run i uses seed + i")->capture_default_str();
  run->add_option("--max-fes", max_fes, "evaluation budget override (default: schedule)");
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  run->add_flag("--timing", timing, "also write timing.csv");
  run->add_flag("--no-traces", no_traces, "skip per-run trace CSVs");

  std::string eval_problem;
  std::string eval_point;
  auto* eval = app.add_subcommand("eval", "evaluate one point and print the constraint report");
  eval->add_option("--problem", eval_problem, "problem id")->required();
  eval->add_option("--point", eval_point, "comma-separated coordinates")->required();

  auto* list = app.add_subcommand("list", "print the problem catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (list->parsed()) return cmd_list();
    if (eval->parsed()) return cmd_eval(eval_problem, eval_point);

    harness::ExperimentSpec spec;
    const auto suite = harness::parse_suite(suite_name);
    if (!suite) {
      std::cerr << "error: unknown suite '" << suite_name << "'\n";
      return kUsageError;
    }
    spec.suite = *suite;
    spec.algorithms.clear();
    for (const auto& name : split(alg_list, ',')) {
      const auto alg = harness::parse_algorithm(name);
      if (!alg) {
        std::cerr << "error: unknown algorithm '" << name << "'\n";
        return kUsageError;
      }
      spec.algorithms.push_back(*alg);
    }
    spec.problems = split(problem_list, ',');
    spec.dims = dims;
    spec.runs = runs;
    spec.base_seed = seed;
    if (max_fes > 0) spec.max_fes = max_fes;
    spec.output_dir = out_dir;
    spec.threads = threads;
    spec.timing = timing;
    spec.keep_traces = !no_traces;

    const auto report = harness::run_experiment(spec);
    print_summary(report);
    return 0;
  } catch (const UnknownFunction& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}
