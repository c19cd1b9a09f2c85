#include "sacolor/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sacolor/errors.hpp"

// The enumeration scores each assignment from a flat edge list and does not
// go through full_energy or delta_energy, so it can check both.

namespace sacolor {
namespace {

void check_budget(const Graph& g, Color q) {
  if (q == 0) throw ParameterError("need at least one color");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.n_vertices(); ++i) {
    total *= q;
    if (total > kExhaustiveBudget) {
      throw ParameterError("exhaustive search over " + std::to_string(q) + "^" + std::to_string(g.n_vertices()) +
                           " colorings exceeds budget of " + std::to_string(kExhaustiveBudget));
    }
  }
}

// Calls visit(bad_edge_count) once per assignment in odometer order.
template <typename Visit>
void enumerate(const Graph& g, Color q, Visit&& visit) {
  const std::vector<Edge> edges = g.edges();
  std::vector<Color> colors(g.n_vertices(), 0);
  while (true) {
    std::int64_t bad = 0;
    for (const Edge& e : edges) bad += colors[e.u] == colors[e.v];
    visit(bad);

    std::size_t pos = 0;
    while (pos < colors.size() && ++colors[pos] == q) colors[pos++] = 0;
    if (pos == colors.size()) return;
  }
}

}  // namespace

std::uint64_t count_proper_colorings(const Graph& g, Color q) {
  if (g.n_vertices() > kMaxCountVertices) {
    throw ParameterError("proper-coloring count is limited to " + std::to_string(kMaxCountVertices) + " vertices");
  }
  check_budget(g, q);
  std::uint64_t count = 0;
  enumerate(g, q, [&](std::int64_t bad) { count += bad == 0; });
  return count;
}

Energy brute_force_hmin(const Graph& g, Color q) {
  check_budget(g, q);
  Energy best = static_cast<Energy>(g.n_edges());
  enumerate(g, q, [&](std::int64_t bad) { best = std::min(best, bad); });
  return best;
}

}  // namespace sacolor
