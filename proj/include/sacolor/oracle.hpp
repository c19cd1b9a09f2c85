#pragma once

#include <cstdint>

#include "sacolor/energy.hpp"
#include "sacolor/graph.hpp"

namespace sacolor {

/// Largest q^N the exhaustive routines will enumerate.
inline constexpr std::uint64_t kExhaustiveBudget = 100'000'000;

/// Vertex-count guard for count_proper_colorings.
inline constexpr std::size_t kMaxCountVertices = 16;

/// Exact number of proper q-colorings, by enumerating all q^N assignments.
/// Throws ParameterError when N > 16 or q^N exceeds the budget.
std::uint64_t count_proper_colorings(const Graph& g, Color q);

/// Exact minimum of H over all q^N colorings. Throws ParameterError when
/// q^N exceeds the budget or q == 0.
Energy brute_force_hmin(const Graph& g, Color q);

}  // namespace sacolor
