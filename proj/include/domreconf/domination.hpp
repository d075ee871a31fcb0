#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

// Guards for the exponential routines below. Exceeding either throws ResourceError.
struct EnumerationLimits {
    int max_vertices = 128;
    std::uint64_t max_search_nodes = 200'000'000;
};

bool is_dominating(const Graph& g, const VertexSet& s);

// Vertices dominated by no member of s.
VertexSet undominated(const Graph& g, const VertexSet& s);

// { u not in s : u adjacent to v and to no other member of s }. Requires v in s.
VertexSet private_neighbourhood(const Graph& g, const VertexSet& s, Vertex v);

// v has a neighbour in s and an empty private neighbourhood. Requires s
// dominating and v in s; the result then equals is_dominating(g, s - {v}).
bool is_deletable(const Graph& g, const VertexSet& s, Vertex v);

// All deletable members of a dominating set at once, by counting how many
// members dominate each vertex: v is deletable iff every vertex of N[v] is
// dominated at least twice.
VertexSet deletable_vertices(const Graph& g, const VertexSet& s);

bool is_minimal_dominating(const Graph& g, const VertexSet& s);

struct DominationNumber {
    int size = 0;
    VertexSet witness; // lexicographically smallest optimum
};

// gamma(G): minimum dominating set by iterative deepening over the target size.
// Branches on the closed neighbourhood of the first undominated vertex and
// prunes with a greedy packing bound.
DominationNumber gamma(const Graph& g, const EnumerationLimits& limits = {});

// Gamma(G): maximum minimal dominating set. Enumerates irredundant sets (a
// hereditary property) in lexicographic order and keeps the dominating ones.
DominationNumber big_gamma(const Graph& g, const EnumerationLimits& limits = {});

// Enumerates every dominating set that takes exactly one vertex from each of
// the given vertex-disjoint groups and nothing else. Groups are assigned in
// order; a vertex is checked as soon as every group touching N[v] is fixed, so
// whole subtrees die early. Returns the number of complete assignments visited.
std::uint64_t for_each_dominating_transversal(const Graph& g, std::span<const VertexSet> groups,
                                              const std::function<void(const VertexSet&)>& visit);

} // namespace domreconf
