#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/sequence.hpp"
#include "domreconf/solution_space.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

enum class SearchStatus {
    found,
    disconnected, // a whole component was exhausted: proof that no path exists
    resource_cap, // node or depth cap hit first: nothing is known
};

const char* to_string(SearchStatus status);

struct PathResult {
    SearchStatus status = SearchStatus::resource_cap;
    std::optional<ReconfigSequence> path;
    std::size_t visited = 0;
};

// Shortest reconfiguration sequence from a to b in D_k(G), by bidirectional
// BFS over implicitly generated neighbours. Among equal-length paths the
// result is fixed: each node keeps its lexicographically smallest predecessor
// and the smallest meeting node wins.
PathResult shortest_path(const Graph& g, int k, const VertexSet& a, const VertexSet& b,
                         const SearchLimits& limits = {});

struct GeodesicCount {
    SearchStatus status = SearchStatus::resource_cap;
    int distance = -1;
    std::uint64_t count = 0; // saturates at UINT64_MAX
    std::size_t visited = 0;
};

// Number of distinct shortest a-b paths, by forward BFS with layer path counts.
GeodesicCount geodesic_count(const Graph& g, int k, const VertexSet& a, const VertexSet& b,
                             const SearchLimits& limits = {});

// Every state reachable from s in D_k(G), in canonical order. Throws
// ResourceError when more than limits.max_nodes states are seen.
std::vector<VertexSet> reachable_component(const Graph& g, int k, const VertexSet& s,
                                           const SearchLimits& limits = {});

} // namespace domreconf
