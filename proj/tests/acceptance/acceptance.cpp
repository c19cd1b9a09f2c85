// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [criterion numbers...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sacolor/annealer.hpp"
#include "sacolor/energy.hpp"
#include "sacolor/graph.hpp"
#include "sacolor/multirun.hpp"
#include "sacolor/oracle.hpp"
#include "sacolor/sweep.hpp"

using namespace sacolor;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Verdict()> check;
};

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

// 1. Annealer attains the exhaustive optimum on small ER instances.
Verdict oracle_optimality() {
  std::mt19937_64 rng(20240601);
  int single_hits = 0;
  int best_of_3_hits = 0;
  const int instances = 100;
  const Color qs[] = {2, 3, 4};
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 6 + rng() % 5;
    const double c = std::uniform_real_distribution<double>(2.0, 4.0)(rng);
    const Color q = qs[rng() % 3];
    const Graph g = generate_erdos_renyi(n, c, rng());
    const Energy optimum = brute_force_hmin(g, q);

    AnnealConfig cfg;
    cfg.n_colors = q;
    cfg.n_iterations = 100'000;
    cfg.seed = rng();
    if (run(g, cfg).h_min == optimum) ++single_hits;

    MultiRunConfig mr;
    mr.base = cfg;
    mr.n_runs = 3;
    if (run_many(g, mr).best.h_min == optimum) ++best_of_3_hits;
  }
  std::ostringstream d;
  d << "single run " << single_hits << "/100 (need >= 95), best-of-3 " << best_of_3_hits << "/100 (need 100)";
  return {single_hits >= 95 && best_of_3_hits == instances, d.str()};
}

// 2. delta_energy equals the full recompute difference.
Verdict delta_exactness() {
  std::mt19937_64 rng(7);
  int mismatches = 0;
  const int cases = 100'000;
  for (int i = 0; i < cases; ++i) {
    const std::size_t n = 2 + rng() % 30;
    const Color q = 2 + static_cast<Color>(rng() % 6);
    const double c = std::uniform_real_distribution<double>(0.0, double(n - 1))(rng);
    const Graph g = generate_erdos_renyi(n, c, rng());
    std::vector<Color> colors(n);
    for (auto& x : colors) x = static_cast<Color>(rng() % q);
    Coloring x(colors, q);
    const Vertex v = static_cast<Vertex>(rng() % n);
    Color nc = static_cast<Color>(rng() % (q - 1));
    if (nc >= x[v]) ++nc;
    const std::int64_t d = delta_energy(g, x, v, nc);
    const Energy before = full_energy(g, x);
    x.set(v, nc);
    if (full_energy(g, x) - before != d) ++mismatches;
  }
  return {mismatches == 0, std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches"};
}

// 3. Final beta of the paper-1e6 schedule lands in [21, 24].
Verdict schedule_consistency() {
  const Schedule s{0.8, 1.5};
  const std::size_t firings = 1'000'000 / s.period(1000);
  const double beta = s.beta_after(firings, 1000, 1'000'000);
  std::ostringstream d;
  d << "firings=" << firings << " final beta=" << beta << " (band [21, 24], reported 23)";
  return {beta >= 21.0 && beta <= 24.0, d.str()};
}

// 4. Uphill acceptance frequency within 3 binomial sigma of exp(-beta delta).
Verdict acceptance_statistics() {
  const Edge one[] = {{0, 1}};
  const Edge four[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  struct Case {
    Graph g;
    Coloring start;
    std::int64_t delta;
    double beta;
  };
  // Proper 2-colorings where every proposal raises the energy by exactly delta.
  const Case cases[] = {
      {Graph::from_edges(2, one), Coloring({0, 1}, 2), 1, 1.0},
      {Graph::from_edges(2, one), Coloring({0, 1}, 2), 1, 2.0},
      {Graph::from_edges(4, four), Coloring({0, 1, 0, 1}, 2), 2, 1.0},
  };
  const int trials = 100'000;
  bool ok = true;
  std::ostringstream d;
  Rng rng(99);
  for (const Case& c : cases) {
    int accepted = 0;
    for (int i = 0; i < trials; ++i) {
      Coloring x = c.start;
      const StepOutcome o = metropolis_step(c.g, x, c.beta, rng);
      if (o.delta != c.delta) return {false, "unexpected proposal delta"};
      accepted += o.accepted;
    }
    const double p = std::exp(-c.beta * double(c.delta));
    const double sigma = std::sqrt(p * (1 - p) / trials);
    const double rate = double(accepted) / trials;
    const double z = (rate - p) / sigma;
    ok = ok && std::abs(z) <= 3.0;
    d << "(d=" << c.delta << ",b=" << c.beta << ") rate=" << rate << " p=" << p << " z=" << z << "; ";
  }
  return {ok, d.str()};
}

// 5. Experiment-1 grid: N=1000, paper-1e6 preset, best of 5 runs per cell.
Verdict experiment1() {
  struct Cell {
    double c;
    Color q;
    Energy lo;
    Energy hi;
  };
  const Cell cells[] = {
      {5, 3, 0, 80},    {5, 5, 0, 0},       {5, 7, 0, 0},     {10, 3, 280, 520}, {10, 5, 0, 0},
      {10, 7, 0, 0},    {20, 3, 1200, 1850}, {20, 5, 150, 450}, {20, 7, 0, 25},
  };
  bool ok = true;
  std::ostringstream d;
  for (const Cell& cell : cells) {
    const Graph g = generate_erdos_renyi(1000, cell.c, graph_seed_for_degree(1, cell.c));
    MultiRunConfig mr;
    apply_preset(mr.base, Preset::Paper1e6);
    mr.base.n_colors = cell.q;
    mr.base.seed = cell_seed(graph_seed_for_degree(1, cell.c), cell.q);
    mr.n_runs = 5;
    const Energy h = run_many(g, mr).best.h_min;
    const bool in_band = h >= cell.lo && h <= cell.hi;
    ok = ok && in_band;
    d << "(c=" << cell.c << ",q=" << cell.q << ") " << h << (in_band ? "" : " OUT") << " [" << cell.lo << ","
      << cell.hi << "]; ";
  }
  return {ok, d.str()};
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// 6. Experiment-2 sweep: zero at low c, onset order q=3,5,7, ordered positive slopes for c >= 50.
Verdict experiment2() {
  SweepConfig sc;
  sc.n_vertices = 1000;
  // c = 2, 3 join the step-5 grid so the low-degree check covers all of c <= 3
  sc.c_values = {1, 2, 3};
  for (int c = 5; c <= 100; c += 5) sc.c_values.push_back(c);
  sc.q_values = {3, 5, 7};
  apply_preset(sc.anneal, Preset::Paper1e6);
  sc.runs_per_cell = 3;
  sc.base_seed = 1;
  const auto rows = run_sweep(sc);

  const Color qs[] = {3, 5, 7};
  bool low_zero = true;
  std::vector<double> onset;
  std::vector<double> slopes;
  for (Color q : qs) {
    double first_nonzero = -1;
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
      if (r.q != q) continue;
      if (r.c <= 3 && r.h_min != 0) low_zero = false;
      if (r.h_min > 0 && first_nonzero < 0) first_nonzero = r.c;
      if (r.c >= 50) {
        xs.push_back(r.c);
        ys.push_back(double(r.h_min));
      }
    }
    onset.push_back(first_nonzero);
    slopes.push_back(slope(xs, ys));
  }
  const bool onset_ok = onset[0] > 0 && onset[0] < onset[1] && onset[1] < onset[2];
  const bool slope_ok = slopes[0] > slopes[1] && slopes[1] > slopes[2] && slopes[2] > 0;
  std::ostringstream d;
  d << rows.size() << " rows; (a) zero at c<=3: " << (low_zero ? "yes" : "NO") << "; (b) onset c q3/q5/q7 = "
    << onset[0] << "/" << onset[1] << "/" << onset[2] << "; (c) slopes c>=50 = " << slopes[0] << "/" << slopes[1]
    << "/" << slopes[2];
  return {low_zero && onset_ok && slope_ok, d.str()};
}

// 7. Proper colorings of K3.
Verdict proper_count() {
  const Graph k3 = complete(3);
  const auto a = count_proper_colorings(k3, 3);
  const auto b = count_proper_colorings(k3, 4);
  const auto c = count_proper_colorings(k3, 5);
  std::ostringstream d;
  d << "q=3,4,5 -> " << a << ", " << b << ", " << c << " (expect 6, 24, 60)";
  return {a == 6 && b == 24 && c == 60, d.str()};
}

// 8. Sequential and concurrent run_many agree; single runs reproduce.
Verdict determinism() {
  const Graph g = generate_erdos_renyi(1000, 20, 3);
  MultiRunConfig mr;
  mr.base.n_colors = 5;
  mr.base.n_iterations = 200'000;
  mr.base.seed = 11;
  mr.n_runs = 6;
  mr.workers = 1;
  const MultiRunResult seq = run_many(g, mr);
  mr.workers = 4;
  const MultiRunResult par = run_many(g, mr);
  const MultiRunResult par2 = run_many(g, mr);

  AnnealConfig single = mr.base;
  const bool single_ok = run(g, single) == run(g, single);
  const bool multi_ok = seq.all_hmins == par.all_hmins && seq.best == par.best && par.all_hmins == par2.all_hmins;
  std::ostringstream d;
  d << "run_many seq==par: " << (multi_ok ? "yes" : "NO") << "; single-run repeat identical: "
    << (single_ok ? "yes" : "NO");
  return {multi_ok && single_ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "oracle optimality", 30, oracle_optimality},
      {2, "delta exactness", 5, delta_exactness},
      {3, "schedule final beta", 1, schedule_consistency},
      {4, "acceptance-rule statistics", 5, acceptance_statistics},
      {5, "experiment 1 reproduction", 300, experiment1},
      {6, "experiment 2 qualitative reproduction", 900, experiment2},
      {7, "proper-coloring count oracle", 1, proper_count},
      {8, "determinism and parallel safety", 30, determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("[%s] %d. %s (%.2fs, budget %.0fs%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.budget_seconds, in_time ? "" : " EXCEEDED", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
