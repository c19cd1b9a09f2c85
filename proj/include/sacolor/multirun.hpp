#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "sacolor/annealer.hpp"

namespace sacolor {

/// Seed for run `index` of a batch: splitmix64(base + (index + 1) * 0x9E3779B97F4A7C15).
/// The affine step is injective in `index` and the splitmix64 finalizer is a
/// bijection, so distinct indices always give distinct seeds.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

struct MultiRunConfig {
  /// Template for every run; base.seed is the batch base seed.
  AnnealConfig base{};
  std::size_t n_runs = 1;
  /// 0 selects std::thread::hardware_concurrency(); always capped at n_runs.
  std::size_t workers = 0;

  void validate() const;
  std::size_t effective_workers() const noexcept;
};

struct MultiRunResult {
  RunResult best;
  std::size_t best_index = 0;
  std::vector<Energy> all_hmins;
  std::vector<std::uint64_t> run_seeds;
};

/// Called after each finished run, possibly from a worker thread (calls are
/// serialized). Not part of the deterministic output.
using ProgressFn = std::function<void(std::size_t completed, std::size_t total, Energy best_so_far)>;

/// Runs n_runs independent anneals over g and keeps the lowest h_min
/// (lowest run index on ties). Output does not depend on the worker count.
MultiRunResult run_many(const Graph& g, const MultiRunConfig& cfg, const ProgressFn& progress = {});

}  // namespace sacolor
