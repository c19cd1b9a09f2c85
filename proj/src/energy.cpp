#include "sacolor/energy.hpp"

#include <string>

#include "sacolor/errors.hpp"

namespace sacolor {

Coloring::Coloring(std::size_t n_vertices, Color n_colors) : colors_(n_vertices, 0), n_colors_(n_colors) {
  if (n_colors == 0) throw ParameterError("a coloring needs at least one color");
}

Coloring::Coloring(std::vector<Color> colors, Color n_colors) : colors_(std::move(colors)), n_colors_(n_colors) {
  if (n_colors == 0) throw ParameterError("a coloring needs at least one color");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] >= n_colors) {
      throw ParameterError("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                           " outside [0, " + std::to_string(n_colors) + ")");
    }
  }
}

void Coloring::set(Vertex v, Color c) {
  if (v >= colors_.size()) throw ContractError("vertex " + std::to_string(v) + " out of range");
  if (c >= n_colors_) throw ContractError("color " + std::to_string(c) + " out of range");
  colors_[v] = c;
}

namespace {

void check_compatible(const Graph& g, const Coloring& x) {
  if (x.size() != g.n_vertices()) {
    throw ContractError("coloring has " + std::to_string(x.size()) + " entries but graph has " +
                        std::to_string(g.n_vertices()) + " vertices");
  }
}

void check_vertex_color(const Graph& g, const Coloring& x, Vertex v, Color color) {
  check_compatible(g, x);
  if (v >= g.n_vertices()) throw ContractError("vertex " + std::to_string(v) + " out of range");
  if (color >= x.n_colors()) throw ContractError("color " + std::to_string(color) + " out of range");
}

}  // namespace

Energy full_energy(const Graph& g, const Coloring& x) {
  check_compatible(g, x);
  Energy h = 0;
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    for (Vertex w : g.neighbors_unchecked(u)) {
      if (u < w && x[u] == x[w]) ++h;
    }
  }
  return h;
}

std::size_t conflicts_at(const Graph& g, const Coloring& x, Vertex v, Color color) {
  check_vertex_color(g, x, v, color);
  std::size_t count = 0;
  for (Vertex w : g.neighbors_unchecked(v)) {
    if (x[w] == color) ++count;
  }
  return count;
}

std::int64_t delta_energy(const Graph& g, const Coloring& x, Vertex v, Color new_color) {
  check_vertex_color(g, x, v, new_color);
  if (new_color == x[v]) throw ContractError("proposed color equals the current color");
  return detail::delta_energy_unchecked(g, x, v, new_color);
}

}  // namespace sacolor
