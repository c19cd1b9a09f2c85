#include "sacolor/annealer.hpp"

#include <cmath>
#include <string>

#include "sacolor/errors.hpp"

namespace sacolor {

double Schedule::growth_factor(std::size_t n_vertices, std::uint64_t n_iterations) {
  return (kGrowthBase + static_cast<double>(n_vertices) / static_cast<double>(n_iterations)) / kGrowthBase;
}

std::uint64_t Schedule::period(std::size_t n_vertices) const {
  const double p = std::floor(trials_factor * static_cast<double>(n_vertices));
  return p < 1.0 ? 1 : static_cast<std::uint64_t>(p);
}

double Schedule::beta_after(std::size_t firings, std::size_t n_vertices, std::uint64_t n_iterations) const {
  double beta = beta0;
  for (std::size_t i = 0; i < firings; ++i) beta = update_beta(*this, beta, n_vertices, n_iterations);
  return beta;
}

void Schedule::validate() const {
  if (!(beta0 > 0.0) || !std::isfinite(beta0)) throw ParameterError("beta0 must be positive and finite");
  if (!(trials_factor > 0.0) || !std::isfinite(trials_factor)) {
    throw ParameterError("trials factor must be positive and finite");
  }
}

double update_beta(const Schedule&, double beta, std::size_t n_vertices, std::uint64_t n_iterations) {
  return beta * Schedule::growth_factor(n_vertices, n_iterations);
}

std::uint64_t AnnealConfig::effective_trace_stride() const noexcept {
  if (trace_stride > 0) return trace_stride;
  return n_iterations / 1000 > 0 ? n_iterations / 1000 : 1;
}

void AnnealConfig::validate() const {
  if (n_colors < 2) throw ParameterError("need at least 2 colors, got " + std::to_string(n_colors));
  if (n_iterations < 1) throw ParameterError("need at least one iteration");
  schedule.validate();
}

Coloring init_coloring(std::size_t n_vertices, Color q, Rng& rng) {
  if (q < 2) throw ParameterError("need at least 2 colors, got " + std::to_string(q));
  std::uniform_int_distribution<Color> pick(0, q - 1);
  std::vector<Color> colors(n_vertices);
  for (auto& c : colors) c = pick(rng);
  return Coloring(std::move(colors), q);
}

bool metropolis_accept(std::int64_t delta, double beta, Rng& rng) {
  if (delta <= 0) return true;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < std::exp(-beta * static_cast<double>(delta));
}

namespace {

// Proposal and acceptance shared by metropolis_step and run(); the caller has
// already validated g, x and beta.
inline StepOutcome step_impl(const Graph& g, Coloring& x, double beta, Rng& rng,
                             std::uniform_int_distribution<Vertex>& pick_vertex,
                             std::uniform_int_distribution<Color>& pick_other) {
  const Vertex v = pick_vertex(rng);
  const Color current = x[v];
  Color proposal = pick_other(rng);
  if (proposal >= current) ++proposal;
  const std::int64_t delta = detail::delta_energy_unchecked(g, x, v, proposal);
  const bool accepted = metropolis_accept(delta, beta, rng);
  if (accepted) x.set_unchecked(v, proposal);
  return {delta, accepted};
}

}  // namespace

StepOutcome metropolis_step(const Graph& g, Coloring& x, double beta, Rng& rng) {
  if (g.n_vertices() == 0) throw ParameterError("graph has no vertices");
  if (x.size() != g.n_vertices()) throw ContractError("coloring length does not match graph");
  if (x.n_colors() < 2) throw ParameterError("need at least 2 colors");
  if (!(beta > 0.0)) throw ParameterError("beta must be positive");
  std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(g.n_vertices() - 1));
  std::uniform_int_distribution<Color> pick_other(0, x.n_colors() - 2);
  return step_impl(g, x, beta, rng, pick_vertex, pick_other);
}

RunResult run(const Graph& g, const AnnealConfig& cfg) {
  cfg.validate();
  const std::size_t n_vertices = g.n_vertices();
  if (n_vertices == 0) throw ParameterError("graph has no vertices");

  Rng rng(cfg.seed);
  std::uniform_int_distribution<Vertex> pick_vertex(0, static_cast<Vertex>(n_vertices - 1));
  std::uniform_int_distribution<Color> pick_other(0, cfg.n_colors - 2);

  RunResult result;
  Coloring x = init_coloring(n_vertices, cfg.n_colors, rng);
  Energy energy = full_energy(g, x);
  result.h_min = energy;
  result.best_coloring = x;
  result.best_step = 0;

  const std::uint64_t n = cfg.n_iterations;
  const std::uint64_t period = cfg.schedule.period(n_vertices);
  const std::uint64_t stride = cfg.effective_trace_stride();
  double beta = cfg.schedule.beta0;

  result.trace.reserve(static_cast<std::size_t>(n / stride + 2));
  result.trace.push_back({0, energy, beta});

  for (std::uint64_t t = 1; t <= n; ++t) {
    const StepOutcome step = step_impl(g, x, beta, rng, pick_vertex, pick_other);
    if (step.accepted) {
      ++result.n_accepted;
      energy += step.delta;
      if (energy < result.h_min) {
        result.h_min = energy;
        result.best_coloring = x;
        result.best_step = t;
      }
    }
    if (t % period == 0) {
      beta = update_beta(cfg.schedule, beta, n_vertices, n);
      ++result.n_schedule_firings;
    }
    if (t % stride == 0 || t == n) result.trace.push_back({t, energy, beta});
  }

  result.final_beta = beta;
  result.final_energy = energy;
  result.final_coloring = std::move(x);
  return result;
}

}  // namespace sacolor
