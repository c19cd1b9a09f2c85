#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sacolor {

using Vertex = std::uint32_t;

/// Undirected edge. Not required to be normalized on input.
struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph stored as compressed adjacency lists.
///
/// Neighbor lists are sorted ascending, contain no duplicates and never the
/// vertex itself. Every edge appears in both endpoint lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges and both orientations
  /// collapse to one edge. Throws ParameterError on self-loops or endpoints
  /// outside [0, n_vertices).
  static Graph from_edges(std::size_t n_vertices, std::span<const Edge> edges);

  std::size_t n_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t n_edges() const noexcept { return neighbors_.size() / 2; }

  /// Throws std::out_of_range if v >= n_vertices().
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Unchecked variant for inner loops.
  std::span<const Vertex> neighbors_unchecked(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Every edge once with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  double average_degree() const noexcept {
    return n_vertices() == 0 ? 0.0 : 2.0 * static_cast<double>(n_edges()) / static_cast<double>(n_vertices());
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// G(N, p) with p = avg_degree / (N - 1): every unordered pair is an edge
/// independently with probability p. Deterministic in (n_vertices, avg_degree, seed).
Graph generate_erdos_renyi(std::size_t n_vertices, double avg_degree, std::uint64_t seed);

/// Reads the DIMACS `.col` subset: `c` comment lines, one `p edge N M`
/// header, and `e u v` lines with 1-based endpoints. Duplicate edges are
/// merged. A header edge count that disagrees with the merged count is
/// reported through `warnings` (when non-null) rather than rejected.
Graph load_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);

/// Writes `p edge N M` followed by each edge once as `e u v` with u < v.
void save_dimacs(const Graph& g, std::ostream& out, std::string_view comment = {});

}  // namespace sacolor
