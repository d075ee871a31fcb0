#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

// m+1 pairwise vertex-disjoint edges {u_i, w_i} of a host graph, with the
// induced partition of V(G) into the u-side U, the w-side W and the outsiders R.
class IndependentEdgeSet {
public:
    // Validates disjointness and that every pair is an edge of g; throws PreconditionError.
    IndependentEdgeSet(const Graph& g, std::vector<Edge> pairs);

    std::span<const Edge> pairs() const noexcept { return pairs_; }
    std::size_t count() const noexcept { return pairs_.size(); }
    int m() const noexcept { return static_cast<int>(pairs_.size()) - 1; }

    Vertex u(std::size_t i) const { return pairs_.at(i).u; }
    Vertex w(std::size_t i) const { return pairs_.at(i).v; }

    const VertexSet& u_side() const noexcept { return u_side_; }
    const VertexSet& w_side() const noexcept { return w_side_; }
    const VertexSet& outsiders() const noexcept { return outsiders_; }

    // N = V(G) - W, the common target of the staged reconfiguration.
    VertexSet canonical_target() const { return w_side_.complement(); }

private:
    std::vector<Edge> pairs_; // u is the smaller endpoint
    VertexSet u_side_;
    VertexSet w_side_;
    VertexSet outsiders_;
};

// Size of a maximum matching of g.
std::size_t maximum_matching_size(const Graph& g);

// Returns `count` independent edges. Greedy maximal matching over the edges
// in lexicographic order first; if that is too small, an exact maximum
// matching (allowed up to max_exact_edges edges). Throws NotFoundError when the
// maximum matching is provably smaller than count, ResourceError when the graph
// is too large for the exact fallback.
IndependentEdgeSet find_independent_edges(const Graph& g, std::size_t count, std::size_t max_exact_edges = 2000);

} // namespace domreconf
