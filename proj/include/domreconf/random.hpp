#pragma once

#include <cstdint>
#include <random>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

// std::mt19937_64 is fully specified, the standard distributions are not;
// draws go through uniform_below so seeded runs match on every platform.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0, by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Empty graph on n vertices, random non-edges added until connected, then
// up to `extra` further random edges.
Graph random_connected_graph(int n, Rng& rng, int extra = 0);

// Random graph where each pair is an edge with probability num/den.
Graph random_graph(int n, Rng& rng, int num, int den);

// Vertices in random order added until the set dominates, then deletable
// vertices removed in random order: a random minimal dominating set.
VertexSet random_minimal_dominating_set(const Graph& g, Rng& rng);

} // namespace domreconf
