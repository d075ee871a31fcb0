#include "domreconf/random.hpp"

#include <numeric>
#include <vector>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

void shuffle(std::vector<Vertex>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = g.make_set({0});
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbours(v)) {
            if (!seen.contains(u)) {
                seen.insert(u);
                stack.push_back(u);
            }
        }
    }
    return static_cast<int>(seen.size()) == g.order();
}

} // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("uniform_below needs a positive bound");
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    while (true) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

Graph random_connected_graph(int n, Rng& rng, int extra) {
    Graph g(n);
    const auto max_edges = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    auto add_random_edge = [&] {
        while (true) {
            auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            if (u != v && !g.adjacent(u, v)) {
                g.add_edge(u, v);
                return;
            }
        }
    };
    while (!connected(g)) add_random_edge();
    for (int i = 0; i < extra && g.edge_count() < max_edges; ++i) add_random_edge();
    return g;
}

Graph random_graph(int n, Rng& rng, int num, int den) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (uniform_below(rng, static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num)) g.add_edge(u, v);
        }
    }
    return g;
}

VertexSet random_minimal_dominating_set(const Graph& g, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    VertexSet s = g.empty_set();
    for (Vertex v : order) {
        if (is_dominating(g, s)) break;
        s.insert(v);
    }
    shuffle(order, rng);
    for (Vertex v : order) {
        if (s.contains(v) && is_dominating(g, s.without(v))) s.erase(v);
    }
    return s;
}

} // namespace domreconf
