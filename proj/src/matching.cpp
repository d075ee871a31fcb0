#include "domreconf/matching.hpp"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "domreconf/errors.hpp"

namespace domreconf {

IndependentEdgeSet::IndependentEdgeSet(const Graph& g, std::vector<Edge> pairs)
    : pairs_(std::move(pairs)),
      u_side_(g.empty_set()),
      w_side_(g.empty_set()),
      outsiders_(g.empty_set()) {
    if (pairs_.empty()) throw PreconditionError("independent edge set needs at least one edge");
    VertexSet used = g.empty_set();
    for (const Edge& e : pairs_) {
        if (e.u < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
            throw PreconditionError("pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} is not an edge of the graph");
        }
        if (used.contains(e.u) || used.contains(e.v)) {
            throw PreconditionError("edges share an endpoint at pair {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
        }
        used.insert(e.u);
        used.insert(e.v);
        u_side_.insert(e.u);
        w_side_.insert(e.v);
    }
    outsiders_ = used.complement();
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;

std::vector<Edge> greedy_matching(const Graph& g) {
    std::vector<Edge> out;
    VertexSet used = g.empty_set();
    for (const Edge& e : g.edges()) {
        if (!used.contains(e.u) && !used.contains(e.v)) {
            out.push_back(e);
            used.insert(e.u);
            used.insert(e.v);
        }
    }
    return out;
}

std::vector<Edge> exact_matching(const Graph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges()) boost::add_edge(static_cast<BoostVertex>(e.u), static_cast<BoostVertex>(e.v), bg);
    std::vector<BoostVertex> mate(static_cast<std::size_t>(g.order()));
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    std::vector<Edge> out;
    const auto none = boost::graph_traits<BoostGraph>::null_vertex();
    for (std::size_t v = 0; v < mate.size(); ++v) {
        if (mate[v] != none && v < mate[v]) out.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(mate[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::size_t maximum_matching_size(const Graph& g) {
    if (g.order() == 0) return 0;
    return exact_matching(g).size();
}

IndependentEdgeSet find_independent_edges(const Graph& g, std::size_t count, std::size_t max_exact_edges) {
    if (count == 0) throw PreconditionError("independent edge count must be at least 1");
    std::vector<Edge> matching = greedy_matching(g);
    if (matching.size() < count) {
        if (g.edge_count() > max_exact_edges) {
            throw ResourceError("greedy matching found " + std::to_string(matching.size()) + " of " +
                                    std::to_string(count) + " edges and the graph is too large for exact matching",
                                matching.size());
        }
        matching = exact_matching(g);
        if (matching.size() < count) {
            throw NotFoundError("maximum matching has " + std::to_string(matching.size()) + " edges, fewer than " +
                                std::to_string(count));
        }
    }
    matching.resize(count);
    return IndependentEdgeSet(g, std::move(matching));
}

} // namespace domreconf
