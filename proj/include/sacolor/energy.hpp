#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sacolor/graph.hpp"

namespace sacolor {

using Color = std::uint32_t;

/// Number of monochromatic edges. Always an exact integer count.
using Energy = std::int64_t;

/// Assignment of one of `n_colors` labels to each vertex.
class Coloring {
 public:
  Coloring() = default;

  /// All vertices start at color 0. Throws ParameterError if n_colors == 0.
  Coloring(std::size_t n_vertices, Color n_colors);

  /// Throws ParameterError if any entry is outside [0, n_colors).
  Coloring(std::vector<Color> colors, Color n_colors);

  std::size_t size() const noexcept { return colors_.size(); }
  Color n_colors() const noexcept { return n_colors_; }

  Color operator[](Vertex v) const noexcept { return colors_[v]; }

  /// Throws ContractError on out-of-range vertex or color.
  void set(Vertex v, Color c);

  void set_unchecked(Vertex v, Color c) noexcept { colors_[v] = c; }

  const std::vector<Color>& colors() const noexcept { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
  Color n_colors_ = 0;
};

/// H(x): sum over undirected edges of [x_u == x_w].
Energy full_energy(const Graph& g, const Coloring& x);

/// Neighbors of v currently holding `color`.
std::size_t conflicts_at(const Graph& g, const Coloring& x, Vertex v, Color color);

/// H(x with v recolored to new_color) - H(x), in O(deg v).
/// Throws ContractError if new_color equals the current color of v.
std::int64_t delta_energy(const Graph& g, const Coloring& x, Vertex v, Color new_color);

namespace detail {

// Hot-loop form of delta_energy: no argument checks, single neighbor pass.
inline std::int64_t delta_energy_unchecked(const Graph& g, const Coloring& x, Vertex v, Color new_color) noexcept {
  const Color old_color = x[v];
  std::int64_t delta = 0;
  for (Vertex w : g.neighbors_unchecked(v)) {
    const Color cw = x[w];
    delta += static_cast<std::int64_t>(cw == new_color) - static_cast<std::int64_t>(cw == old_color);
  }
  return delta;
}

}  // namespace detail

}  // namespace sacolor
