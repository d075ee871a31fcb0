#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domreconf/vertex_set.hpp"

namespace domreconf {

// Unordered vertex pair, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..order()-1. Neighbour lists are kept
// sorted and closed neighbourhoods N[v] are cached as bit vectors.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    // Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    bool adjacent(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    const VertexSet& closed_neighbourhood(Vertex v) const { return closed_.at(static_cast<std::size_t>(v)); }

    // All edges, lexicographically sorted.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(static_cast<std::size_t>(order())); }
    VertexSet all_vertices() const { return VertexSet::full(static_cast<std::size_t>(order())); }
    VertexSet make_set(std::initializer_list<Vertex> members) const {
        return VertexSet(static_cast<std::size_t>(order()), members);
    }

    bool valid_set(const VertexSet& s) const noexcept {
        return s.universe() == static_cast<std::size_t>(order());
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> closed_;
    std::size_t edge_count_ = 0;
};

// Graph file format:
//   c <comment>
//   p ds <n> <#edges>
//   e <u> <v>          (1-based ids, one line per edge)
// Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);

// Canonical text: header then edges sorted lexicographically. Comments are
// emitted first, one "c " line each.
std::string serialize_graph(const Graph& g, std::span<const std::string> comments = {});

Graph read_graph_file(const std::string& path);

} // namespace domreconf
