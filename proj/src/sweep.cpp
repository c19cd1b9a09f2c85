#include "sacolor/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "sacolor/errors.hpp"
#include "sacolor/graph.hpp"
#include "sacolor/multirun.hpp"

namespace sacolor {

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "paper-1e6") return Preset::Paper1e6;
  if (name == "paper-1e9") return Preset::Paper1e9;
  return std::nullopt;
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::Paper1e6: return "paper-1e6";
    case Preset::Paper1e9: return "paper-1e9";
  }
  return "unknown";
}

void apply_preset(AnnealConfig& cfg, Preset p) {
  switch (p) {
    case Preset::Paper1e6:
      cfg.n_iterations = 1'000'000;
      cfg.schedule = {0.8, 1.5};
      break;
    case Preset::Paper1e9:
      cfg.n_iterations = 1'000'000'000;
      cfg.schedule = {0.98, 3.4};
      break;
  }
}

void SweepConfig::validate() const {
  if (n_vertices == 0) throw ParameterError("sweep needs at least one vertex");
  if (c_values.empty()) throw ParameterError("sweep needs at least one average degree");
  if (q_values.empty()) throw ParameterError("sweep needs at least one color count");
  if (runs_per_cell == 0) throw ParameterError("sweep needs at least one run per cell");
  for (double c : c_values) {
    if (!(c >= 0.0) || c > static_cast<double>(n_vertices - 1)) {
      throw ParameterError("average degree " + std::to_string(c) + " outside [0, N-1]");
    }
  }
  for (Color q : q_values) {
    if (q < 2) throw ParameterError("color count " + std::to_string(q) + " is below 2");
  }
  AnnealConfig probe = anneal;
  probe.n_colors = 2;
  probe.validate();
}

std::uint64_t graph_seed_for_degree(std::uint64_t base_seed, double c) noexcept {
  return derive_run_seed(base_seed, std::bit_cast<std::uint64_t>(c + 0.0));
}

std::uint64_t cell_seed(std::uint64_t graph_seed, Color q) noexcept {
  return derive_run_seed(graph_seed ^ 0xC0105EEDull, q);
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const SweepProgressFn& progress) {
  cfg.validate();

  std::vector<double> cs = cfg.c_values;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::vector<Color> qs = cfg.q_values;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<Graph> graphs;
  std::vector<std::uint64_t> graph_seeds;
  graphs.reserve(cs.size());
  for (double c : cs) {
    graph_seeds.push_back(graph_seed_for_degree(cfg.base_seed, c));
    graphs.push_back(generate_erdos_renyi(cfg.n_vertices, c, graph_seeds.back()));
  }

  const std::size_t n_cells = cs.size() * qs.size();
  std::vector<SweepRecord> rows(n_cells);
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::size_t done = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::size_t cell = next.fetch_add(1); cell < n_cells; cell = next.fetch_add(1)) {
      const std::size_t ci = cell / qs.size();
      const Color q = qs[cell % qs.size()];
      SweepRecord row{cs[ci], q, 0, graphs[ci].n_edges(), graph_seeds[ci]};
      try {
        MultiRunConfig mr;
        mr.base = cfg.anneal;
        mr.base.n_colors = q;
        mr.base.seed = cell_seed(graph_seeds[ci], q);
        mr.n_runs = cfg.runs_per_cell;
        mr.workers = 1;
        row.h_min = run_many(graphs[ci], mr).best.h_min;
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      rows[cell] = row;
      std::lock_guard lock(mutex);
      ++done;
      if (progress) progress(row, done, n_cells);
    }
  };

  std::size_t n_workers = cfg.workers;
  if (n_workers == 0) n_workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, n_cells);
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace sacolor
