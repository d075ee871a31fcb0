#include "domreconf/solution_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> rank_;
};

std::size_t env_or(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') return fallback;
    return static_cast<std::size_t>(value);
}

} // namespace

SearchLimits SearchLimits::from_environment() {
    SearchLimits limits;
    limits.max_nodes = env_or("DOMRECONF_LIMIT_NODES", limits.max_nodes);
    limits.max_depth = static_cast<int>(env_or("DOMRECONF_MAX_DEPTH", static_cast<std::size_t>(limits.max_depth)));
    return limits;
}

void append_space_neighbours(const Graph& g, int k, const VertexSet& s, std::vector<VertexSet>& out) {
    deletable_vertices(g, s).for_each([&](Vertex v) { out.push_back(s.without(v)); });
    if (static_cast<int>(s.size()) < k) {
        s.complement().for_each([&](Vertex v) { out.push_back(s.with(v)); });
    }
}

std::vector<VertexSet> space_neighbours(const Graph& g, int k, const VertexSet& s) {
    if (!g.valid_set(s)) throw PreconditionError("set is over the wrong universe");
    if (static_cast<int>(s.size()) > k) throw PreconditionError("set " + to_string(s) + " exceeds k");
    if (!is_dominating(g, s)) throw PreconditionError("set " + to_string(s) + " is not dominating");
    std::vector<VertexSet> out;
    append_space_neighbours(g, k, s, out);
    return out;
}

SolutionSpace::SolutionSpace(Graph host, int k, std::vector<VertexSet> nodes)
    : host_(std::move(host)), k_(k), nodes_(std::move(nodes)), adjacency_(nodes_.size()) {
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index_.emplace(nodes_[i], i).second) throw PreconditionError("duplicate node " + to_string(nodes_[i]));
    }
    // every edge joins a set to one of its one-smaller subsets
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        nodes_[i].for_each([&](Vertex v) {
            auto it = index_.find(nodes_[i].without(v));
            if (it != index_.end()) {
                adjacency_[i].push_back(it->second);
                adjacency_[it->second].push_back(i);
                ++edge_count_;
            }
        });
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> SolutionSpace::index_of(const VertexSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SolutionSpace build_space(const Graph& g, int k, const SearchLimits& limits) {
    const int n = g.order();
    // closing[i]: vertices whose whole closed neighbourhood is decided once vertex i is
    std::vector<std::vector<Vertex>> closing(static_cast<std::size_t>(std::max(n, 1)));
    for (Vertex u = 0; u < n; ++u) {
        Vertex last = u;
        for (Vertex x : g.neighbours(u)) last = std::max(last, x);
        closing[static_cast<std::size_t>(last)].push_back(u);
    }
    std::vector<VertexSet> found;
    auto record = [&](const VertexSet& s) {
        found.push_back(s);
        if (found.size() > limits.max_nodes) {
            throw ResourceError("D_" + std::to_string(k) + " has more than " + std::to_string(limits.max_nodes) +
                                    " nodes",
                                found.size());
        }
    };
    if (n == 0) {
        if (k >= 0) record(g.empty_set());
        return SolutionSpace(g, k, std::move(found));
    }

    VertexSet chosen = g.empty_set();
    VertexSet dominated = g.empty_set();
    auto closed_ok = [&](Vertex i, const VertexSet& dom) {
        for (Vertex u : closing[static_cast<std::size_t>(i)]) {
            if (!dom.contains(u)) return false;
        }
        return true;
    };
    // depth-first over include/exclude decisions for vertex i
    auto decide = [&](auto& self, Vertex i, int size) -> void {
        if (i == n) {
            record(chosen);
            return;
        }
        if (size < k) {
            VertexSet saved = dominated;
            chosen.insert(i);
            dominated |= g.closed_neighbourhood(i);
            if (closed_ok(i, dominated)) self(self, i + 1, size + 1);
            chosen.erase(i);
            dominated = std::move(saved);
        }
        if (closed_ok(i, dominated)) self(self, i + 1, size);
    };
    decide(decide, 0, 0);
    std::sort(found.begin(), found.end(), canonical_less);
    return SolutionSpace(g, k, std::move(found));
}

std::vector<std::vector<std::size_t>> components(const SolutionSpace& space) {
    const auto& adj = space.adjacency();
    DisjointSet dsu(adj.size());
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j : adj[i]) dsu.unite(i, j);
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(adj.size(), SIZE_MAX);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        std::size_t root = dsu.find(i);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(i);
    }
    return out;
}

std::vector<int> bfs_distances(const SolutionSpace& space, std::size_t source) {
    const auto& adj = space.adjacency();
    std::vector<int> dist(adj.size(), -1);
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t y : adj[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<ComponentDiameter> component_diameter(const SolutionSpace& space) {
    std::vector<ComponentDiameter> out;
    for (auto& comp : components(space)) {
        int diameter = 0;
        for (std::size_t source : comp) {
            auto dist = bfs_distances(space, source);
            for (std::size_t target : comp) diameter = std::max(diameter, dist[target]);
        }
        out.push_back({std::move(comp), diameter});
    }
    return out;
}

std::string export_space(const SolutionSpace& space) {
    std::ostringstream out;
    const auto& nodes = space.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) out << "node " << i + 1 << ' ' << to_string(nodes[i]) << '\n';
    const auto& adj = space.adjacency();
    for (std::size_t i = 0; i < adj.size(); ++i) {
        for (std::size_t j : adj[i]) {
            if (i < j) out << "arc " << i + 1 << ' ' << j + 1 << '\n';
        }
    }
    return out.str();
}

} // namespace domreconf
