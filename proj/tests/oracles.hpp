#pragma once

// Brute-force reference implementations for the tests. They work on plain
// 64-bit masks and adjacency matrices and share no code with the library's
// search paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace oracle {

using Mask = std::uint64_t;

struct SmallGraph {
    int n = 0;
    std::vector<Mask> closed; // closed neighbourhood masks

    explicit SmallGraph(const domreconf::Graph& g) : n(g.order()), closed(static_cast<std::size_t>(g.order())) {
        for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = Mask{1} << v;
        for (const auto& e : g.edges()) {
            closed[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
            closed[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
        }
    }

    Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    bool dominating(Mask s) const {
        for (int v = 0; v < n; ++v) {
            if ((closed[static_cast<std::size_t>(v)] & s) == 0) return false;
        }
        return true;
    }

    bool minimal_dominating(Mask s) const {
        if (!dominating(s)) return false;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            if (dominating(s & ~(rest & -rest))) return false;
        }
        return true;
    }
};

inline Mask to_mask(const domreconf::VertexSet& s) {
    Mask m = 0;
    s.for_each([&](domreconf::Vertex v) { m |= Mask{1} << v; });
    return m;
}

inline domreconf::VertexSet to_set(Mask m, int n) {
    domreconf::VertexSet s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if ((m >> v) & 1U) s.insert(v);
    }
    return s;
}

// Sorted member lists compared lexicographically.
inline bool mask_lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int x = std::countr_zero(a);
        int y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

struct Optimum {
    int size = -1;
    Mask witness = 0;
};

inline Optimum gamma(const SmallGraph& g) {
    Optimum best;
    for (Mask s = 0; s <= g.all(); ++s) {
        if (!g.dominating(s)) continue;
        int size = std::popcount(s);
        if (best.size < 0 || size < best.size || (size == best.size && mask_lex_less(s, best.witness))) {
            best = {size, s};
        }
        if (s == g.all()) break;
    }
    return best;
}

inline Optimum big_gamma(const SmallGraph& g) {
    Optimum best;
    for (Mask s = 0; s <= g.all(); ++s) {
        if (g.minimal_dominating(s)) {
            int size = std::popcount(s);
            if (size > best.size || (size == best.size && mask_lex_less(s, best.witness))) best = {size, s};
        }
        if (s == g.all()) break;
    }
    return best;
}

// Explicit D_k(G) by scanning every subset.
struct Space {
    std::vector<Mask> nodes;
    std::map<Mask, std::size_t> index;
    std::vector<std::vector<std::size_t>> adj;

    Space(const SmallGraph& g, int k) {
        for (Mask s = 0; s <= g.all(); ++s) {
            if (std::popcount(s) <= k && g.dominating(s)) nodes.push_back(s);
            if (s == g.all()) break;
        }
        for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
        adj.resize(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                if (std::popcount(nodes[i] ^ nodes[j]) == 1) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
            }
        }
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& a : adj) e += a.size();
        return e / 2;
    }

    std::vector<int> distances(std::size_t from) const {
        std::vector<int> dist(nodes.size(), -1);
        std::deque<std::size_t> q{from};
        dist[from] = 0;
        while (!q.empty()) {
            auto x = q.front();
            q.pop_front();
            for (auto y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
        return dist;
    }

    int distance(Mask a, Mask b) const { return distances(index.at(a))[index.at(b)]; }

    std::size_t component_count() const {
        std::vector<int> seen(nodes.size(), 0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (seen[i]) continue;
            ++count;
            auto d = distances(i);
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (d[j] >= 0) seen[j] = 1;
            }
        }
        return count;
    }

    // Number of shortest paths between a and b, counted by enumerating
    // layer by layer with explicit predecessor sums.
    std::uint64_t geodesics(Mask a, Mask b) const {
        auto da = distances(index.at(a));
        auto target = index.at(b);
        if (da[target] < 0) return 0;
        std::vector<std::uint64_t> ways(nodes.size(), 0);
        ways[index.at(a)] = 1;
        for (int layer = 1; layer <= da[target]; ++layer) {
            for (std::size_t x = 0; x < nodes.size(); ++x) {
                if (da[x] != layer) continue;
                for (auto y : adj[x]) {
                    if (da[y] == layer - 1) ways[x] += ways[y];
                }
            }
        }
        return ways[target];
    }
};

// Maximum matching size by exhaustive recursion (n <= ~20).
inline int matching_size(const domreconf::Graph& g) {
    auto edges = g.edges();
    int best = 0;
    auto rec = [&](auto& self, std::size_t i, Mask used, int size) -> void {
        best = std::max(best, size);
        if (size + static_cast<int>(edges.size() - i) <= best) return;
        for (std::size_t j = i; j < edges.size(); ++j) {
            Mask m = (Mask{1} << edges[j].u) | (Mask{1} << edges[j].v);
            if ((used & m) == 0) self(self, j + 1, used | m, size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

} // namespace oracle
