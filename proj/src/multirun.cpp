#include "sacolor/multirun.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "sacolor/errors.hpp"

namespace sacolor {

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void MultiRunConfig::validate() const {
  if (n_runs == 0) throw ParameterError("need at least one run");
  base.validate();
}

std::size_t MultiRunConfig::effective_workers() const noexcept {
  std::size_t w = workers;
  if (w == 0) w = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::min(w, n_runs);
}

MultiRunResult run_many(const Graph& g, const MultiRunConfig& cfg, const ProgressFn& progress) {
  cfg.validate();
  const std::size_t k = cfg.n_runs;

  MultiRunResult out;
  out.run_seeds.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.run_seeds[i] = derive_run_seed(cfg.base.seed, i);

  std::vector<std::optional<RunResult>> results(k);
  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  std::size_t completed = 0;
  Energy best_so_far = std::numeric_limits<Energy>::max();
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < k; i = next.fetch_add(1)) {
      try {
        AnnealConfig run_cfg = cfg.base;
        run_cfg.seed = out.run_seeds[i];
        results[i] = run(g, run_cfg);
      } catch (...) {
        std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(progress_mutex);
      ++completed;
      best_so_far = std::min(best_so_far, results[i]->h_min);
      if (progress) progress(completed, k, best_so_far);
    }
  };

  const std::size_t n_workers = cfg.effective_workers();
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  out.all_hmins.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.all_hmins.push_back(results[i]->h_min);
    if (results[i]->h_min < results[out.best_index]->h_min) out.best_index = i;
  }
  out.best = std::move(*results[out.best_index]);
  return out;
}

}  // namespace sacolor
