#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sacolor/annealer.hpp"
#include "sacolor/errors.hpp"
#include "sacolor/graph.hpp"
#include "sacolor/multirun.hpp"
#include "sacolor/report.hpp"
#include "sacolor/sweep.hpp"

namespace sacolor::cli {
namespace {

// Thrown for unreadable inputs and unwritable outputs; maps to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

// Flags shared by solve and sweep. Unset optionals leave the preset value.
struct AnnealFlags {
  std::string preset = "paper-1e6";
  std::optional<std::uint64_t> iters;
  std::optional<double> beta0;
  std::optional<double> trials_factor;
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  std::uint64_t trace_stride = 0;
  std::size_t workers = 0;

  void add_to(CLI::App& app) {
    app.add_option("--preset", preset, "Parameter preset: paper-1e6 or paper-1e9")->capture_default_str();
    app.add_option("--iters", iters, "Iterations per run (overrides preset)");
    app.add_option("--beta0", beta0, "Initial inverse temperature (overrides preset)");
    app.add_option("--trials-factor", trials_factor, "Beta update period as a multiple of N (overrides preset)");
    app.add_option("--seed", seed, "Base seed")->capture_default_str();
    app.add_option("--runs", runs, "Independent restarts, best is kept")->capture_default_str();
    app.add_option("--trace-stride", trace_stride, "Iterations between trace samples (0 = n/1000)")
        ->capture_default_str();
    app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  }

  AnnealConfig to_config(Color q) const {
    const auto p = parse_preset(preset);
    if (!p) throw ParameterError("unknown preset '" + preset + "'");
    AnnealConfig cfg;
    apply_preset(cfg, *p);
    cfg.n_colors = q;
    cfg.seed = seed;
    cfg.trace_stride = trace_stride;
    if (iters) cfg.n_iterations = *iters;
    if (beta0) cfg.schedule.beta0 = *beta0;
    if (trials_factor) cfg.schedule.trials_factor = *trials_factor;
    cfg.validate();
    return cfg;
  }
};

int cmd_generate(std::size_t n, double c, std::uint64_t seed, const std::string& out_path, std::ostream& out) {
  const Graph g = generate_erdos_renyi(n, c, seed);
  auto f = open_output(out_path);
  save_dimacs(g, f, "erdos-renyi n=" + std::to_string(n) + " c=" + format_real(c) + " seed=" + std::to_string(seed));
  finish_output(f, out_path);
  out << g.n_edges() << '\n';
  return kExitOk;
}

int cmd_solve(const std::string& graph_path, Color q, const AnnealFlags& flags, const std::string& prefix,
              bool progress, std::ostream& out, std::ostream& err) {
  MultiRunConfig mr;
  mr.base = flags.to_config(q);
  mr.n_runs = flags.runs;
  mr.workers = flags.workers;
  mr.validate();

  std::ifstream in(graph_path);
  if (!in) throw IoError("cannot open graph '" + graph_path + "'");
  std::vector<std::string> warnings;
  Graph g;
  try {
    g = load_dimacs(in, &warnings);
  } catch (const ParseError& e) {
    throw IoError("'" + graph_path + "': " + e.what());
  }
  for (const auto& w : warnings) err << "warning: " << graph_path << ": " << w << '\n';

  ProgressFn report;
  if (progress) {
    report = [&err](std::size_t done, std::size_t total, Energy best) {
      err << "run " << done << "/" << total << " best h_min=" << best << '\n';
    };
  }
  const auto t0 = std::chrono::steady_clock::now();
  const MultiRunResult res = run_many(g, mr, report);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  SolveSummary summary;
  summary.h_min = res.best.h_min;
  summary.final_beta = res.best.final_beta;
  summary.n_accepted = res.best.n_accepted;
  summary.all_hmins = res.all_hmins;
  summary.elapsed_seconds = elapsed;
  auto& cfg = summary.config;
  cfg["graph"] = graph_path;
  cfg["n_vertices"] = g.n_vertices();
  cfg["n_edges"] = g.n_edges();
  cfg["preset"] = flags.preset;
  cfg["q"] = mr.base.n_colors;
  cfg["iters"] = mr.base.n_iterations;
  cfg["beta0"] = mr.base.schedule.beta0;
  cfg["trials_factor"] = mr.base.schedule.trials_factor;
  cfg["seed"] = mr.base.seed;
  cfg["runs"] = mr.n_runs;
  cfg["trace_stride"] = mr.base.effective_trace_stride();
  cfg["run_seeds"] = res.run_seeds;
  cfg["best_run"] = res.best_index;

  const std::string trace_path = prefix + ".trace.csv";
  const std::string summary_path = prefix + ".summary.json";
  {
    auto f = open_output(trace_path);
    write_trace_csv(f, res.best.trace);
    finish_output(f, trace_path);
  }
  {
    auto f = open_output(summary_path);
    f << to_json(summary).dump(2) << '\n';
    finish_output(f, summary_path);
  }
  out << "h_min=" << res.best.h_min << " final_beta=" << format_real(res.best.final_beta)
      << " n_accepted=" << res.best.n_accepted << " runs=" << res.all_hmins.size() << '\n';
  return kExitOk;
}

int cmd_sweep(std::size_t n, const std::string& c_text, const std::string& q_text, const AnnealFlags& flags,
              const std::string& out_path, bool progress, std::ostream& out, std::ostream& err) {
  SweepConfig sc;
  sc.n_vertices = n;
  sc.c_values = parse_real_list(c_text);
  for (double q : parse_real_list(q_text)) {
    if (q != std::floor(q) || q < 0 || q > 1e6) throw ParameterError("color count must be an integer");
    sc.q_values.push_back(static_cast<Color>(q));
  }
  sc.anneal = flags.to_config(2);
  sc.runs_per_cell = flags.runs;
  sc.base_seed = flags.seed;
  sc.workers = flags.workers;
  sc.validate();

  auto f = open_output(out_path);
  SweepProgressFn report;
  if (progress) {
    report = [&err](const SweepRecord& r, std::size_t done, std::size_t total) {
      err << "cell " << done << "/" << total << " c=" << format_real(r.c) << " q=" << r.q << " h_min=" << r.h_min
          << '\n';
    };
  }
  const auto rows = run_sweep(sc, report);
  write_sweep_csv(f, rows);
  finish_output(f, out_path);
  out << rows.size() << " rows\n";
  return kExitOk;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream items(text);
  auto to_real = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw ParameterError("bad number '" + s + "' in list");
    return v;
  };
  for (std::string item; std::getline(items, item, ',');) {
    if (item.empty()) throw ParameterError("empty entry in list '" + text + "'");
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      values.push_back(to_real(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos) throw ParameterError("range '" + item + "' must be start:stop:step");
    const double start = to_real(item.substr(0, c1));
    const double stop = to_real(item.substr(c1 + 1, c2 - c1 - 1));
    const double step = to_real(item.substr(c2 + 1));
    if (!(step > 0) || stop < start) throw ParameterError("range '" + item + "' is empty or has nonpositive step");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    for (std::size_t i = 0; i <= count; ++i) values.push_back(start + static_cast<double>(i) * step);
  }
  if (values.empty()) throw ParameterError("empty list");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph coloring by simulated annealing"};
  app.require_subcommand(1);

  std::size_t gen_n = 0;
  double gen_c = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write an Erdos-Renyi graph in DIMACS .col format");
  generate->add_option("--n", gen_n, "Vertex count")->required();
  generate->add_option("--c", gen_c, "Average degree")->required();
  generate->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  generate->add_option("--out", gen_out, "Output .col path")->required();

  std::string solve_graph;
  Color solve_q = 5;
  std::string solve_out;
  bool solve_progress = false;
  AnnealFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Anneal a DIMACS graph; write <out>.trace.csv and <out>.summary.json");
  solve->add_option("--graph", solve_graph, "Input .col path")->required();
  solve->add_option("--q", solve_q, "Number of colors")->capture_default_str();
  solve->add_option("--out", solve_out, "Output path prefix")->required();
  solve->add_flag("--progress", solve_progress, "Report finished runs on stderr");
  solve_flags.add_to(*solve);

  std::size_t sweep_n = 1000;
  std::string sweep_c = "1:100:1";
  std::string sweep_q = "3,5,7";
  std::string sweep_out;
  bool sweep_progress = false;
  AnnealFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "H_min over a grid of average degrees and color counts");
  sweep->add_option("--n", sweep_n, "Vertex count")->capture_default_str();
  sweep->add_option("--c", sweep_c, "Average degrees, e.g. 1,5:100:5")->capture_default_str();
  sweep->add_option("--q", sweep_q, "Color counts, e.g. 3,5,7")->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();
  sweep->add_flag("--progress", sweep_progress, "Report finished cells on stderr");
  sweep_flags.add_to(*sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen_n, gen_c, gen_seed, gen_out, out);
    if (*solve) return cmd_solve(solve_graph, solve_q, solve_flags, solve_out, solve_progress, out, err);
    if (*sweep) return cmd_sweep(sweep_n, sweep_c, sweep_q, sweep_flags, sweep_out, sweep_progress, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace sacolor::cli
