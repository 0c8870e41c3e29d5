#include "eco/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "eco/classic.hpp"
#include "eco/ecosystem.hpp"
#include "eco/engineering.hpp"
#include "eco/pso.hpp"

namespace eco::harness {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string to_string(Suite s) {
  switch (s) {
    case Suite::classic:
      return "classic";
    case Suite::engineering:
      return "engineering";
    case Suite::single:
      return "single";
  }
  return "?";
}

std::string to_string(Algorithm a) { return a == Algorithm::eco ? "eco" : "pso"; }

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::classic, Suite::engineering, Suite::single}) {
    if (to_string(s) == name) return s;
  }
  if (name == "single-problem") return Suite::single;
  return std::nullopt;
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "eco") return Algorithm::eco;
  if (name == "pso") return Algorithm::pso;
  return std::nullopt;
}

std::vector<std::string> suite_ids(Suite suite) {
  std::vector<std::string> ids;
  if (suite == Suite::classic) {
    for (int i = 1; i <= classic::kFunctionCount; ++i) ids.push_back("f" + std::to_string(i));
  } else if (suite == Suite::engineering) {
    for (auto id : engineering::all_ids()) ids.push_back(engineering::to_string(id));
  }
  return ids;
}

CatalogEntry lookup(const std::string& id, std::size_t dim) {
  if (auto cid = classic::parse_id(id)) {
    auto f = classic::make_classic(*cid, dim);
    return {"f" + std::to_string(*cid), Family::classic, std::move(f.problem), std::nullopt};
  }
  if (auto eid = engineering::parse_id(id)) {
    auto e = engineering::make_engineering(*eid);
    return {engineering::to_string(*eid), Family::engineering, std::move(e.problem),
            std::move(e.reference.x)};
  }
  throw UnknownFunction(id);
}

std::size_t engineering_budget(std::size_t dim) {
  if (dim <= 10) return 100000;
  if (dim <= 30) return 200000;
  if (dim <= 50) return 400000;
  if (dim <= 150) return 800000;
  return 1000000;
}

std::size_t resolve_budget(const CatalogEntry& entry, std::optional<std::size_t> override_fes) {
  if (override_fes) return *override_fes;
  if (entry.family == Family::engineering) return engineering_budget(entry.problem.dim());
  return 10000 * entry.problem.dim();
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::vector<double> ExperimentReport::bests(const std::string& problem, Algorithm algorithm) const {
  std::vector<double> out;
  for (const auto& r : records) {
    if (r.problem == problem && r.algorithm == algorithm) out.push_back(r.best_value);
  }
  return out;
}

RunRecord execute_run(const CatalogEntry& entry, Algorithm algorithm, std::size_t run_index,
                      std::uint64_t base_seed, std::size_t max_fes) {
  RunRecord rec;
  rec.problem = entry.id;
  rec.algorithm = algorithm;
  rec.run_index = run_index;
  rec.seed = base_seed + run_index;
  rec.max_fes = max_fes;

  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  if (algorithm == Algorithm::eco) {
    EcoConfig config;
    config.max_fes = max_fes;
    config.seed = rec.seed;
    result = run_eco(entry.problem, config);
  } else {
    PsoConfig config;
    config.max_fes = max_fes;
    config.seed = rec.seed;
    result = run_pso(entry.problem, config);
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.best_value = result.best.value;
  rec.best_violation = result.best.violation;
  rec.best_position = std::move(result.best_position);
  rec.fes_used = result.fes_used;
  rec.iterations = result.iterations;
  rec.trace = std::move(result.trace);
  return rec;
}

namespace {

struct Job {
  std::size_t entry;
  Algorithm algorithm;
  std::size_t run;
};

void validate(const ExperimentSpec& spec) {
  if (spec.runs == 0) throw std::invalid_argument("runs must be >= 1");
  if (spec.algorithms.empty()) throw std::invalid_argument("at least one algorithm is required");
  if (spec.max_fes && *spec.max_fes == 0) throw std::invalid_argument("max_fes must be positive");
  if (spec.dims.empty()) throw std::invalid_argument("at least one dimension is required");
  for (std::size_t d : spec.dims) {
    if (d == 0) throw std::invalid_argument("dimensions must be >= 1");
  }
  if (spec.suite == Suite::single && spec.problems.empty()) {
    throw std::invalid_argument("single-problem suite needs explicit problem ids");
  }
}

}  // namespace

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  validate(spec);
  const auto ids = spec.problems.empty() ? suite_ids(spec.suite) : spec.problems;
  std::vector<CatalogEntry> entries;
  for (const auto& id : ids) {
    auto first = lookup(id, spec.dims.front());
    const auto cid = classic::parse_id(id);
    if (spec.dims.size() == 1 || !cid || classic::make_classic(*cid, 1).fixed_dim) {
      entries.push_back(std::move(first));
      continue;
    }
    for (std::size_t d : spec.dims) {
      auto e = lookup(id, d);
      e.id += "_d" + std::to_string(d);
      entries.push_back(std::move(e));
    }
  }

  if (!spec.output_dir.empty()) {
    std::error_code ec;
    fs::create_directories(spec.output_dir, ec);
    if (ec || !fs::is_directory(spec.output_dir)) {
      throw std::runtime_error("cannot create output directory " + spec.output_dir.string());
    }
  }

  std::vector<Job> jobs;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    for (Algorithm a : spec.algorithms) {
      for (std::size_t r = 0; r < spec.runs; ++r) jobs.push_back({e, a, r});
    }
  }

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const auto& job = jobs[i];
        const auto& entry = entries[job.entry];
        records[i] = execute_run(entry, job.algorithm, job.run, spec.base_seed,
                                 resolve_budget(entry, spec.max_fes));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  for (const auto& e : entries) report.problems.push_back(e.id);
  report.algorithms = spec.algorithms;
  report.records = std::move(records);

  for (const auto& problem : report.problems) {
    for (Algorithm a : report.algorithms) {
      const auto values = report.bests(problem, a);
      std::size_t feasible = 0;
      for (const auto& r : report.records) {
        if (r.problem == problem && r.algorithm == a && r.feasible()) ++feasible;
      }
      report.summary.push_back({problem, a, analysis::summarize(values),
                                static_cast<double>(feasible) / static_cast<double>(values.size())});
    }
  }

  if (report.algorithms.size() >= 2) {
    const Algorithm reference = report.algorithms.front();
    std::vector<std::vector<double>> ref_samples;
    std::vector<std::vector<std::vector<double>>> opp_samples(report.algorithms.size() - 1);
    for (const auto& problem : report.problems) {
      ref_samples.push_back(report.bests(problem, reference));
      for (std::size_t o = 1; o < report.algorithms.size(); ++o) {
        auto samples = report.bests(problem, report.algorithms[o]);
        report.pairwise.push_back({problem, reference, report.algorithms[o],
                                   analysis::wilcoxon_rank_sum(ref_samples.back(), samples)});
        opp_samples[o - 1].push_back(std::move(samples));
      }
    }
    report.win_tie_loss = analysis::win_tie_loss(ref_samples, opp_samples);

    analysis::FriedmanTable table;
    for (std::size_t p = 0; p < report.problems.size(); ++p) {
      std::vector<double> ave, mn, sd;
      for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        const auto& s = report.summary[p * report.algorithms.size() + a].summary;
        ave.push_back(s.ave);
        mn.push_back(s.min);
        sd.push_back(s.std);
      }
      table.ave.push_back(std::move(ave));
      table.min.push_back(std::move(mn));
      table.std.push_back(std::move(sd));
    }
    report.friedman = analysis::friedman(table);
  }

  if (!spec.output_dir.empty()) write_report(spec, report);
  return report;
}

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// numbers in the JSON document carry the same 9 significant digits as the CSVs
double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

std::string join_position(const Point& x) {
  std::string s;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) s += ';';
    s += format_number(x[j]);
  }
  return s;
}

}  // namespace

void write_report(const ExperimentSpec& spec, const ExperimentReport& report) {
  const fs::path dir = spec.output_dir;
  std::error_code ec;
  fs::create_directories(dir / "traces", ec);
  fs::create_directories(dir / "diversity", ec);
  if (ec) throw std::runtime_error("cannot create directories under " + dir.string());

  {
    auto out = open_output(dir / "summary.csv");
    out << "problem,algorithm,min,ave,std,feasible_rate\n";
    for (const auto& row : report.summary) {
      out << row.problem << ',' << to_string(row.algorithm) << ',' << format_number(row.summary.min)
          << ',' << format_number(row.summary.ave) << ',' << format_number(row.summary.std) << ','
          << format_number(row.feasible_rate) << '\n';
    }
  }
  {
    auto out = open_output(dir / "runs.csv");
    out << "problem,algorithm,run,seed,best_value,violation,feasible,fes,iterations,best_position\n";
    for (const auto& r : report.records) {
      out << r.problem << ',' << to_string(r.algorithm) << ',' << r.run_index << ',' << r.seed << ','
          << format_number(r.best_value) << ',' << format_number(r.best_violation) << ','
          << (r.feasible() ? 1 : 0) << ',' << r.fes_used << ',' << r.iterations << ','
          << join_position(r.best_position) << '\n';
    }
  }
  if (spec.keep_traces) {
    for (const auto& r : report.records) {
      auto out = open_output(dir / "traces" /
                             (r.problem + "_" + to_string(r.algorithm) + "_run" +
                              std::to_string(r.run_index) + ".csv"));
      out << "iter,fes,best_value,div\n";
      for (const auto& row : r.trace.rows) {
        out << row.iter << ',' << row.fes << ',' << format_number(row.best_value) << ','
            << format_number(row.div) << '\n';
      }
    }
  }
  for (const auto& r : report.records) {
    if (r.algorithm != Algorithm::eco || r.run_index != 0) continue;
    std::vector<double> div;
    for (const auto& row : r.trace.rows) div.push_back(row.div);
    const auto curve = analysis::exploration_curve(div);
    auto out = open_output(dir / "diversity" / (r.problem + "_eco.csv"));
    out << "iter,div,exploration_pct,exploitation_pct\n";
    for (std::size_t k = 0; k < div.size(); ++k) {
      out << r.trace.rows[k].iter << ',' << format_number(curve.div[k]) << ','
          << format_number(curve.exploration_pct[k]) << ','
          << format_number(curve.exploitation_pct[k]) << '\n';
    }
  }
  if (spec.timing) {
    auto out = open_output(dir / "timing.csv");
    out << "problem,algorithm,run,wall_seconds\n";
    for (const auto& r : report.records) {
      out << r.problem << ',' << to_string(r.algorithm) << ',' << r.run_index << ','
          << format_number(r.wall_seconds) << '\n';
    }
  }

  ordered_json doc;
  doc["experiment"] = {{"suite", to_string(spec.suite)},
                       {"problems", report.problems},
                       {"runs", spec.runs},
                       {"dims", spec.dims},
                       {"base_seed", spec.base_seed},
                       {"seed_rule", "seed = base_seed + run_index"}};
  doc["experiment"]["algorithms"] = ordered_json::array();
  for (auto a : report.algorithms) doc["experiment"]["algorithms"].push_back(to_string(a));

  doc["summary"] = ordered_json::array();
  for (const auto& row : report.summary) {
    doc["summary"].push_back({{"problem", row.problem},
                              {"algorithm", to_string(row.algorithm)},
                              {"min", rounded(row.summary.min)},
                              {"ave", rounded(row.summary.ave)},
                              {"std", rounded(row.summary.std)},
                              {"n", row.summary.n},
                              {"feasible_rate", rounded(row.feasible_rate)}});
  }
  if (!report.pairwise.empty()) {
    doc["wilcoxon"] = ordered_json::array();
    for (const auto& row : report.pairwise) {
      doc["wilcoxon"].push_back({{"problem", row.problem},
                                 {"reference", to_string(row.reference)},
                                 {"opponent", to_string(row.opponent)},
                                 {"p_value", rounded(row.verdict.p_value)},
                                 {"alpha", row.verdict.alpha},
                                 {"verdict", analysis::symbol(row.verdict.verdict)}});
    }
    doc["win_tie_loss"] = ordered_json::array();
    for (std::size_t o = 0; o < report.win_tie_loss.size(); ++o) {
      const auto& w = report.win_tie_loss[o];
      doc["win_tie_loss"].push_back({{"reference", to_string(report.algorithms.front())},
                                     {"opponent", to_string(report.algorithms[o + 1])},
                                     {"wins", w.wins},
                                     {"ties", w.ties},
                                     {"losses", w.losses}});
    }
  }
  if (report.friedman) {
    ordered_json fr;
    fr["mean_ranks"] = ordered_json::object();
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
      fr["mean_ranks"][to_string(report.algorithms[a])] = rounded(report.friedman->mean_ranks[a]);
    }
    fr["statistic"] = rounded(report.friedman->statistic);
    fr["p_value"] = rounded(report.friedman->p_value);
    fr["global_rank"] = ordered_json::array();
    for (auto a : report.friedman->global_rank) fr["global_rank"].push_back(to_string(report.algorithms[a]));
    doc["friedman"] = std::move(fr);
  }
  auto out = open_output(dir / "report.json");
  out << doc.dump(2) << '\n';
}

}  // namespace eco::harness
