#include "sacolor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sacolor/errors.hpp"

namespace sacolor {

Graph Graph::from_edges(std::size_t n_vertices, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n_vertices || e.v >= n_vertices) {
      throw ParameterError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") has an endpoint outside [0, " + std::to_string(n_vertices) + ")");
    }
    if (e.u == e.v) {
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    }
    directed.push_back({e.u, e.v});
    directed.push_back({e.v, e.u});
  }
  std::sort(directed.begin(), directed.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n_vertices + 1, 0);
  for (const Edge& e : directed) ++g.offsets_[e.u + 1];
  for (std::size_t v = 0; v < n_vertices; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.reserve(directed.size());
  for (const Edge& e : directed) g.neighbors_.push_back(e.v);
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_vertices()) + ")");
  }
  return neighbors_unchecked(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges());
  for (Vertex u = 0; u < n_vertices(); ++u) {
    for (Vertex w : neighbors_unchecked(u)) {
      if (u < w) out.push_back({u, w});
    }
  }
  return out;
}

Graph generate_erdos_renyi(std::size_t n_vertices, double avg_degree, std::uint64_t seed) {
  if (n_vertices == 0) throw ParameterError("Erdos-Renyi graph needs at least one vertex");
  if (!(avg_degree >= 0.0)) throw ParameterError("average degree must be nonnegative");
  const double max_degree = static_cast<double>(n_vertices - 1);
  if (avg_degree > max_degree) {
    throw ParameterError("average degree " + std::to_string(avg_degree) + " exceeds N - 1 = " +
                         std::to_string(n_vertices - 1));
  }
  const double p = n_vertices == 1 ? 0.0 : avg_degree / max_degree;

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(avg_degree * static_cast<double>(n_vertices) * 0.6) + 16);
  for (Vertex u = 0; u < n_vertices; ++u) {
    for (Vertex w = u + 1; w < n_vertices; ++w) {
      if (coin(rng)) edges.push_back({u, w});
    }
  }
  return Graph::from_edges(n_vertices, edges);
}

namespace {

// Parses a full unsigned integer token; rejects signs, trailing junk and overflow.
bool parse_count(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.size() > 19) return false;
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  out = value;
  return true;
}

}  // namespace

Graph load_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n_vertices = 0;
  std::uint64_t declared_edges = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;  // blank line
    if (tag == "c") continue;

    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);

    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (rest.size() != 3 || rest[0] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <N> <M>': " + line);
      }
      if (!parse_count(rest[1], n_vertices) || !parse_count(rest[2], declared_edges)) {
        throw ParseError(line_no, "malformed header counts: " + line);
      }
      if (n_vertices > 0xFFFFFFFFull) throw ParseError(line_no, "vertex count too large");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before 'p edge' header");
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      if (rest.size() != 2 || !parse_count(rest[0], u) || !parse_count(rest[1], v)) {
        throw ParseError(line_no, "malformed edge line: " + line);
      }
      if (u < 1 || u > n_vertices || v < 1 || v > n_vertices) {
        throw ParseError(line_no, "edge endpoint outside [1, " + std::to_string(n_vertices) + "]: " + line);
      }
      if (u == v) throw ParseError(line_no, "self-loop: " + line);
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p edge <N> <M>' header");

  Graph g = Graph::from_edges(static_cast<std::size_t>(n_vertices), edges);
  if (warnings && g.n_edges() != declared_edges) {
    warnings->push_back("header declares " + std::to_string(declared_edges) + " edges, found " +
                        std::to_string(g.n_edges()) + " distinct edges");
  }
  return g;
}

void save_dimacs(const Graph& g, std::ostream& out, std::string_view comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.n_vertices() << ' ' << g.n_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace sacolor
