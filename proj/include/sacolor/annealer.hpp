#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sacolor/energy.hpp"
#include "sacolor/graph.hpp"

namespace sacolor {

/// Per-run random source. 64-bit Mersenne Twister seeded with the run seed;
/// no global state is shared between runs.
using Rng = std::mt19937_64;

/// Geometric β-schedule. Every `period(N)` proposals β is multiplied by
/// (0.2 + N/n) / 0.2, where N is the vertex count and n the run length.
struct Schedule {
  double beta0 = 0.8;
  double trials_factor = 1.5;

  static constexpr double kGrowthBase = 0.2;

  /// (0.2 + N/n) / 0.2; strictly greater than 1 for N, n >= 1.
  static double growth_factor(std::size_t n_vertices, std::uint64_t n_iterations);

  /// Proposals between β updates: max(1, floor(trials_factor * N)).
  std::uint64_t period(std::size_t n_vertices) const;

  /// β after `firings` updates.
  double beta_after(std::size_t firings, std::size_t n_vertices, std::uint64_t n_iterations) const;

  void validate() const;
};

/// One multiplicative schedule step: beta * (0.2 + N/n) / 0.2.
double update_beta(const Schedule& s, double beta, std::size_t n_vertices, std::uint64_t n_iterations);

struct AnnealConfig {
  Color n_colors = 5;
  std::uint64_t n_iterations = 1'000'000;
  Schedule schedule{};
  std::uint64_t seed = 1;
  /// 0 selects max(1, n_iterations / 1000).
  std::uint64_t trace_stride = 0;

  std::uint64_t effective_trace_stride() const noexcept;

  /// Throws ParameterError on q < 2, n < 1 or an invalid schedule.
  void validate() const;
};

struct TraceSample {
  std::uint64_t step;
  Energy energy;
  double beta;

  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

struct RunResult {
  Energy h_min = 0;
  /// Earliest state along the trajectory reaching h_min.
  Coloring best_coloring;
  std::uint64_t best_step = 0;
  double final_beta = 0.0;
  Energy final_energy = 0;
  Coloring final_coloring;
  std::uint64_t n_accepted = 0;
  std::uint64_t n_schedule_firings = 0;
  std::vector<TraceSample> trace;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Each vertex independently uniform over [0, q). Throws ParameterError if q < 2.
Coloring init_coloring(std::size_t n_vertices, Color q, Rng& rng);

struct StepOutcome {
  /// Energy change of the proposal; applied to x only when accepted.
  std::int64_t delta;
  bool accepted;
};

/// Metropolis acceptance: always for delta <= 0, else with probability exp(-beta * delta).
bool metropolis_accept(std::int64_t delta, double beta, Rng& rng);

/// One Metropolis transition on x in place: uniform vertex, uniform color
/// among the q - 1 others, accepted per metropolis_accept.
StepOutcome metropolis_step(const Graph& g, Coloring& x, double beta, Rng& rng);

/// Full annealing run. Deterministic in (g, cfg).
RunResult run(const Graph& g, const AnnealConfig& cfg);

}  // namespace sacolor
