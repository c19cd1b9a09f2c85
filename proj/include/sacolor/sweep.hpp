#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sacolor/annealer.hpp"
#include "sacolor/energy.hpp"

namespace sacolor {

/// Named parameter sets for the annealer.
///   paper-1e6: n = 10^6, beta0 = 0.8,  trials = 1.5 N
///   paper-1e9: n = 10^9, beta0 = 0.98, trials = 3.4 N
enum class Preset { Paper1e6, Paper1e9 };

std::optional<Preset> parse_preset(std::string_view name);
std::string_view preset_name(Preset p);

/// Applies the preset's iteration count and schedule; leaves q, seed and stride alone.
void apply_preset(AnnealConfig& cfg, Preset p);

struct SweepConfig {
  std::size_t n_vertices = 1000;
  std::vector<double> c_values;
  std::vector<Color> q_values;
  /// Template for every cell; n_colors and seed are overwritten per cell.
  AnnealConfig anneal{};
  std::size_t runs_per_cell = 1;
  std::uint64_t base_seed = 1;
  /// Cells solved concurrently; 0 selects hardware concurrency.
  std::size_t workers = 0;

  void validate() const;
};

struct SweepRecord {
  double c;
  Color q;
  Energy h_min;
  std::size_t n_edges;
  /// Seed of the Erdos-Renyi instance for this c.
  std::uint64_t seed;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// Graph seed for average degree c: one instance per c, shared by every q.
std::uint64_t graph_seed_for_degree(std::uint64_t base_seed, double c) noexcept;

/// Anneal base seed for cell (graph seed, q).
std::uint64_t cell_seed(std::uint64_t graph_seed, Color q) noexcept;

using SweepProgressFn = std::function<void(const SweepRecord& finished, std::size_t done, std::size_t total)>;

/// Generates one graph per c and solves it for every q with best-of-runs.
/// Rows are sorted by (c, q) and do not depend on the worker count.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg, const SweepProgressFn& progress = {});

}  // namespace sacolor
