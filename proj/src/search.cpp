#include "domreconf/search.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

void check_endpoint(const Graph& g, int k, const VertexSet& s, const char* name) {
    if (!g.valid_set(s)) throw PreconditionError(std::string(name) + " is over the wrong universe");
    if (static_cast<int>(s.size()) > k) {
        throw PreconditionError(std::string(name) + " " + to_string(s) + " has more than k = " + std::to_string(k) +
                                " vertices");
    }
    if (!is_dominating(g, s)) throw PreconditionError(std::string(name) + " " + to_string(s) + " is not dominating");
}

// One BFS tree: states by discovery order, parent pointers and depths.
struct BfsTree {
    std::vector<VertexSet> states;
    std::vector<std::uint32_t> parent;
    std::vector<int> depth;
    std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> index;
    std::vector<std::uint32_t> layer;
    int layer_depth = 0;

    explicit BfsTree(const VertexSet& root) {
        add(root, kNoParent, 0);
        layer.push_back(0);
    }

    std::uint32_t add(const VertexSet& s, std::uint32_t from, int d) {
        auto id = static_cast<std::uint32_t>(states.size());
        states.push_back(s);
        parent.push_back(from);
        depth.push_back(d);
        index.emplace(s, id);
        return id;
    }

    // states from the root down to id
    std::vector<VertexSet> chain_from_root(std::uint32_t id) const {
        std::vector<VertexSet> out;
        for (std::uint32_t x = id; x != kNoParent; x = parent[x]) out.push_back(states[x]);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

Move move_between(const VertexSet& from, const VertexSet& to) {
    VertexSet added = to - from;
    if (!added.empty()) return Move::add(added.first());
    return Move::remove((from - to).first());
}

ReconfigSequence sequence_from_states(const std::vector<VertexSet>& states, int k) {
    ReconfigSequence seq{states.front(), {}, k};
    for (std::size_t i = 1; i < states.size(); ++i) seq.moves.push_back(move_between(states[i - 1], states[i]));
    return seq;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

} // namespace

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::found: return "found";
        case SearchStatus::disconnected: return "disconnected";
        case SearchStatus::resource_cap: return "resource_cap";
    }
    return "?";
}

PathResult shortest_path(const Graph& g, int k, const VertexSet& a, const VertexSet& b, const SearchLimits& limits) {
    check_endpoint(g, k, a, "start");
    check_endpoint(g, k, b, "target");
    if (a == b) return {SearchStatus::found, ReconfigSequence{a, {}, k}, 1};

    BfsTree fwd(a);
    BfsTree bwd(b);
    std::vector<VertexSet> scratch;
    while (true) {
        std::size_t visited = fwd.states.size() + bwd.states.size();
        if (fwd.layer.empty() || bwd.layer.empty()) return {SearchStatus::disconnected, std::nullopt, visited};
        if (limits.max_depth > 0 && fwd.layer_depth + bwd.layer_depth >= limits.max_depth) {
            return {SearchStatus::resource_cap, std::nullopt, visited};
        }
        const bool forward = fwd.layer.size() <= bwd.layer.size();
        BfsTree& side = forward ? fwd : bwd;
        const BfsTree& other = forward ? bwd : fwd;

        std::vector<std::uint32_t> next;
        std::vector<std::uint32_t> meetings;
        for (std::uint32_t x : side.layer) {
            const VertexSet current = side.states[x];
            scratch.clear();
            append_space_neighbours(g, k, current, scratch);
            for (const VertexSet& nb : scratch) {
                auto it = side.index.find(nb);
                if (it == side.index.end()) {
                    std::uint32_t id = side.add(nb, x, side.layer_depth + 1);
                    next.push_back(id);
                    if (other.index.contains(nb)) meetings.push_back(id);
                    if (fwd.states.size() + bwd.states.size() > limits.max_nodes) {
                        return {SearchStatus::resource_cap, std::nullopt, fwd.states.size() + bwd.states.size()};
                    }
                } else if (side.depth[it->second] == side.layer_depth + 1 &&
                           lex_less(current, side.states[side.parent[it->second]])) {
                    side.parent[it->second] = x;
                }
            }
        }
        side.layer = std::move(next);
        ++side.layer_depth;

        if (!meetings.empty()) {
            // all meetings found in the first meeting layer have equal total length
            std::uint32_t best = meetings.front();
            for (std::uint32_t id : meetings) {
                if (lex_less(side.states[id], side.states[best])) best = id;
            }
            const VertexSet& meet = side.states[best];
            auto f_chain = fwd.chain_from_root(fwd.index.at(meet));
            auto b_chain = bwd.chain_from_root(bwd.index.at(meet));
            f_chain.insert(f_chain.end(), b_chain.rbegin() + 1, b_chain.rend());
            return {SearchStatus::found, sequence_from_states(f_chain, k), fwd.states.size() + bwd.states.size()};
        }
    }
}

GeodesicCount geodesic_count(const Graph& g, int k, const VertexSet& a, const VertexSet& b,
                             const SearchLimits& limits) {
    check_endpoint(g, k, a, "start");
    check_endpoint(g, k, b, "target");
    if (a == b) return {SearchStatus::found, 0, 1, 1};

    BfsTree tree(a);
    std::vector<std::uint64_t> count{1};
    std::vector<VertexSet> scratch;
    while (true) {
        if (tree.layer.empty()) return {SearchStatus::disconnected, -1, 0, tree.states.size()};
        if (limits.max_depth > 0 && tree.layer_depth >= limits.max_depth) {
            return {SearchStatus::resource_cap, -1, 0, tree.states.size()};
        }
        std::vector<std::uint32_t> next;
        for (std::uint32_t x : tree.layer) {
            const VertexSet current = tree.states[x];
            scratch.clear();
            append_space_neighbours(g, k, current, scratch);
            for (const VertexSet& nb : scratch) {
                auto it = tree.index.find(nb);
                if (it == tree.index.end()) {
                    std::uint32_t id = tree.add(nb, x, tree.layer_depth + 1);
                    count.push_back(count[x]);
                    next.push_back(id);
                    if (tree.states.size() > limits.max_nodes) {
                        return {SearchStatus::resource_cap, -1, 0, tree.states.size()};
                    }
                } else if (tree.depth[it->second] == tree.layer_depth + 1) {
                    count[it->second] = saturating_add(count[it->second], count[x]);
                }
            }
        }
        tree.layer = std::move(next);
        ++tree.layer_depth;
        if (auto it = tree.index.find(b); it != tree.index.end()) {
            return {SearchStatus::found, tree.depth[it->second], count[it->second], tree.states.size()};
        }
    }
}

std::vector<VertexSet> reachable_component(const Graph& g, int k, const VertexSet& s, const SearchLimits& limits) {
    check_endpoint(g, k, s, "start");
    BfsTree tree(s);
    std::vector<VertexSet> scratch;
    while (!tree.layer.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t x : tree.layer) {
            const VertexSet current = tree.states[x];
            scratch.clear();
            append_space_neighbours(g, k, current, scratch);
            for (const VertexSet& nb : scratch) {
                if (tree.index.contains(nb)) continue;
                next.push_back(tree.add(nb, x, tree.layer_depth + 1));
                if (tree.states.size() > limits.max_nodes) {
                    throw ResourceError("component has more than " + std::to_string(limits.max_nodes) + " states",
                                        tree.states.size());
                }
            }
        }
        tree.layer = std::move(next);
        ++tree.layer_depth;
    }
    std::vector<VertexSet> out = std::move(tree.states);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace domreconf
