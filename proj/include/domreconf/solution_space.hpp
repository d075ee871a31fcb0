#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

struct SearchLimits {
    std::size_t max_nodes = 5'000'000;
    int max_depth = 0; // 0 = unbounded

    // Defaults, overridden by DOMRECONF_LIMIT_NODES / DOMRECONF_MAX_DEPTH when set.
    static SearchLimits from_environment();
};

// Neighbours of s in D_k(G): deletions s - {v} for deletable v, then (when
// |s| < k) additions s + {v}; each group by ascending vertex id. Requires s
// dominating with |s| <= k.
std::vector<VertexSet> space_neighbours(const Graph& g, int k, const VertexSet& s);

// Unchecked variant used by the search kernels; appends to out.
void append_space_neighbours(const Graph& g, int k, const VertexSet& s, std::vector<VertexSet>& out);

// Explicit D_k(G). Nodes are ordered by size, then lexicographically; the
// adjacency lists hold node indices in ascending order.
class SolutionSpace {
public:
    SolutionSpace(Graph host, int k, std::vector<VertexSet> nodes);

    const Graph& host() const noexcept { return host_; }
    int k() const noexcept { return k_; }
    const std::vector<VertexSet>& nodes() const noexcept { return nodes_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adjacency_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::optional<std::size_t> index_of(const VertexSet& s) const;

private:
    Graph host_;
    int k_;
    std::vector<VertexSet> nodes_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
    std::size_t edge_count_ = 0;
};

// Enumerates every dominating set of size <= k. Throws ResourceError (with the
// number of sets found so far) once more than limits.max_nodes are found.
SolutionSpace build_space(const Graph& g, int k, const SearchLimits& limits = {});

// Connected components as sorted node-index lists, ordered by smallest node.
std::vector<std::vector<std::size_t>> components(const SolutionSpace& space);

struct ComponentDiameter {
    std::vector<std::size_t> nodes;
    int diameter = 0;
};

// Exact diameter of every component (BFS from each node).
std::vector<ComponentDiameter> component_diameter(const SolutionSpace& space);

// Hop distances from one node over the explicit adjacency; -1 when unreachable.
std::vector<int> bfs_distances(const SolutionSpace& space, std::size_t source);

// "node <i> <set>" lines then "arc <i> <j>" lines, 1-based node indices, i < j.
std::string export_space(const SolutionSpace& space);

} // namespace domreconf
