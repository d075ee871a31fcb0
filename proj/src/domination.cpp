#include "domreconf/domination.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

void check_set(const Graph& g, const VertexSet& s) {
    if (!g.valid_set(s)) {
        throw PreconditionError("vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph order " + std::to_string(g.order()));
    }
}

void check_member(const VertexSet& s, Vertex v) {
    if (!s.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the set");
}

void check_enumeration_size(const Graph& g, const EnumerationLimits& limits) {
    if (g.order() > limits.max_vertices) {
        throw ResourceError("graph has " + std::to_string(g.order()) + " vertices, enumeration limit is " +
                                std::to_string(limits.max_vertices),
                            0);
    }
}

VertexSet dominated_by(const Graph& g, const VertexSet& s) {
    VertexSet covered = g.empty_set();
    s.for_each([&](Vertex v) { covered |= g.closed_neighbourhood(v); });
    return covered;
}

class GammaSearch {
public:
    GammaSearch(const Graph& g, const EnumerationLimits& limits) : g_(g), limits_(limits) {
        packing_order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(packing_order_.begin(), packing_order_.end(), 0);
        std::stable_sort(packing_order_.begin(), packing_order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }

    // Lower bound on the number of extra vertices needed: undominated vertices
    // with pairwise disjoint usable neighbourhoods each need their own pick.
    int packing_bound(const VertexSet& dominated, const VertexSet& forbidden) const {
        VertexSet used = g_.empty_set();
        int count = 0;
        for (Vertex u : packing_order_) {
            if (dominated.contains(u)) continue;
            VertexSet usable = g_.closed_neighbourhood(u) - forbidden;
            if (usable.empty()) return g_.order() + 1;
            if (!usable.intersects(used)) {
                used |= usable;
                ++count;
            }
        }
        return count;
    }

    void run(int budget) {
        budget_ = budget;
        search(g_.empty_set(), g_.empty_set(), g_.empty_set());
    }

    std::optional<VertexSet> best;

    int initial_bound() const { return packing_bound(g_.empty_set(), g_.empty_set()); }

private:
    void search(const VertexSet& chosen, const VertexSet& dominated, VertexSet forbidden) {
        if (++nodes_ > limits_.max_search_nodes) {
            throw ResourceError("domination number search exceeded " + std::to_string(limits_.max_search_nodes) +
                                    " search nodes",
                                nodes_);
        }
        VertexSet open = dominated.complement();
        if (open.empty()) {
            if (!best || lex_less(chosen, *best)) best = chosen;
            return;
        }
        int remaining = budget_ - static_cast<int>(chosen.size());
        if (remaining <= 0 || packing_bound(dominated, forbidden) > remaining) return;

        // branch on the undominated vertex with the fewest usable candidates
        Vertex pivot = -1;
        std::size_t fewest = 0;
        open.for_each([&](Vertex u) {
            std::size_t c = (g_.closed_neighbourhood(u) - forbidden).size();
            if (pivot < 0 || c < fewest) {
                pivot = u;
                fewest = c;
            }
        });
        VertexSet candidates = g_.closed_neighbourhood(pivot) - forbidden;
        candidates.for_each([&](Vertex x) {
            search(chosen.with(x), dominated | g_.closed_neighbourhood(x), forbidden);
            forbidden.insert(x); // later branches exclude x, so each set is generated once
        });
    }

    const Graph& g_;
    const EnumerationLimits& limits_;
    std::vector<Vertex> packing_order_;
    int budget_ = 0;
    std::uint64_t nodes_ = 0;
};

class IrredundantSearch {
public:
    IrredundantSearch(const Graph& g, const EnumerationLimits& limits) : g_(g), limits_(limits) {}

    void run() {
        VertexSet empty = g_.empty_set();
        dfs(empty, empty, empty, -1);
    }

    int best_size = -1;
    VertexSet best;

private:
    // once: dominated at least once, twice: at least twice.
    void dfs(const VertexSet& s, const VertexSet& once, const VertexSet& twice, Vertex last) {
        if (++nodes_ > limits_.max_search_nodes) {
            throw ResourceError("upper domination search exceeded " + std::to_string(limits_.max_search_nodes) +
                                    " search nodes",
                                nodes_);
        }
        if (static_cast<int>(s.size()) > best_size && once.complement().empty()) {
            best_size = static_cast<int>(s.size());
            best = s;
        }
        for (Vertex v = last + 1; v < g_.order(); ++v) {
            const VertexSet& nv = g_.closed_neighbourhood(v);
            VertexSet next_twice = twice | (once & nv);
            VertexSet next_once = once | nv;
            VertexSet exactly_once = next_once - next_twice;
            VertexSet next = s.with(v);
            bool irredundant = true;
            next.for_each([&](Vertex w) {
                if (irredundant && !g_.closed_neighbourhood(w).intersects(exactly_once)) irredundant = false;
            });
            if (irredundant) dfs(next, next_once, next_twice, v);
        }
    }

    const Graph& g_;
    const EnumerationLimits& limits_;
    std::uint64_t nodes_ = 0;
};

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    return dominated_by(g, s) == g.all_vertices();
}

VertexSet undominated(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    return dominated_by(g, s).complement();
}

VertexSet private_neighbourhood(const Graph& g, const VertexSet& s, Vertex v) {
    check_set(g, s);
    check_member(s, v);
    VertexSet by_others = dominated_by(g, s.without(v));
    VertexSet out = g.empty_set();
    for (Vertex u : g.neighbours(v)) {
        if (!s.contains(u) && !by_others.contains(u)) out.insert(u);
    }
    return out;
}

bool is_deletable(const Graph& g, const VertexSet& s, Vertex v) {
    check_set(g, s);
    check_member(s, v);
    bool has_neighbour_in_s = false;
    for (Vertex u : g.neighbours(v)) {
        if (s.contains(u)) {
            has_neighbour_in_s = true;
            break;
        }
    }
    return has_neighbour_in_s && private_neighbourhood(g, s, v).empty();
}

VertexSet deletable_vertices(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    VertexSet once = g.empty_set();
    VertexSet twice = g.empty_set();
    s.for_each([&](Vertex v) {
        const VertexSet& nv = g.closed_neighbourhood(v);
        twice |= once & nv;
        once |= nv;
    });
    VertexSet exactly_once = once - twice;
    VertexSet out = g.empty_set();
    s.for_each([&](Vertex v) {
        if (!g.closed_neighbourhood(v).intersects(exactly_once)) out.insert(v);
    });
    return out;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& s) {
    if (!is_dominating(g, s)) return false;
    bool minimal = true;
    s.for_each([&](Vertex v) {
        if (minimal && is_dominating(g, s.without(v))) minimal = false;
    });
    return minimal;
}

DominationNumber gamma(const Graph& g, const EnumerationLimits& limits) {
    check_enumeration_size(g, limits);
    GammaSearch search(g, limits);
    for (int budget = search.initial_bound(); budget <= g.order(); ++budget) {
        search.run(budget);
        if (search.best) return {budget, *search.best};
    }
    throw InvariantError("no dominating set found, but V(G) always dominates");
}

DominationNumber big_gamma(const Graph& g, const EnumerationLimits& limits) {
    check_enumeration_size(g, limits);
    IrredundantSearch search(g, limits);
    search.run();
    return {search.best_size, search.best};
}

std::uint64_t for_each_dominating_transversal(const Graph& g, std::span<const VertexSet> groups,
                                              const std::function<void(const VertexSet&)>& visit) {
    VertexSet seen = g.empty_set();
    for (const VertexSet& group : groups) {
        check_set(g, group);
        if (group.intersects(seen)) throw PreconditionError("transversal groups must be vertex-disjoint");
        seen |= group;
    }
    // closes[i]: vertices whose closed neighbourhood meets no group after i
    std::vector<std::vector<Vertex>> closes(groups.size());
    for (Vertex u = 0; u < g.order(); ++u) {
        int last = -1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (g.closed_neighbourhood(u).intersects(groups[i])) last = static_cast<int>(i);
        }
        if (last < 0) return 0; // u can never be dominated
        closes[static_cast<std::size_t>(last)].push_back(u);
    }

    std::uint64_t leaves = 0;
    std::function<void(std::size_t, const VertexSet&, const VertexSet&)> assign =
        [&](std::size_t i, const VertexSet& chosen, const VertexSet& dominated) {
            if (i == groups.size()) {
                ++leaves;
                visit(chosen);
                return;
            }
            groups[i].for_each([&](Vertex x) {
                VertexSet next = dominated | g.closed_neighbourhood(x);
                for (Vertex u : closes[i]) {
                    if (!next.contains(u)) return;
                }
                assign(i + 1, chosen.with(x), next);
            });
        };
    if (groups.empty()) {
        // every vertex would have been rejected above unless the graph is empty
        ++leaves;
        visit(g.empty_set());
        return leaves;
    }
    assign(0, g.empty_set(), g.empty_set());
    return leaves;
}

} // namespace domreconf
