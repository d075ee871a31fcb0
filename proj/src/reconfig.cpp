#include "domreconf/reconfig.hpp"

#include <string>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"

namespace domreconf {

EdgeClassification classify_edges(const VertexSet& s, const IndependentEdgeSet& ind) {
    EdgeClassification out;
    for (std::size_t i = 0; i < ind.count(); ++i) {
        bool has_u = s.contains(ind.u(i));
        bool has_w = s.contains(ind.w(i));
        if (has_u && has_w) {
            out.even.push_back(i);
        } else if (has_u) {
            out.u_odd.push_back(i);
        } else if (has_w) {
            out.w_odd.push_back(i);
        } else {
            out.clean.push_back(i);
        }
    }
    return out;
}

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw InvariantError("staged reconfiguration: " + what);
}

// Applies moves to a working set while recording them, checking each removal
// against the deletability test and each intermediate size against the cap.
class StagedWalk {
public:
    StagedWalk(const Graph& g, const VertexSet& start, int cap, CanonicalPath& out)
        : g_(g), cap_(cap), out_(out), current_(start) {
        out_.sequence = ReconfigSequence{start, {}, cap};
    }

    const VertexSet& current() const noexcept { return current_; }

    void add(Vertex v, std::size_t stage) {
        require(!current_.contains(v), "adding vertex " + std::to_string(v) + " already present");
        current_.insert(v);
        require(static_cast<int>(current_.size()) <= cap_, "set grew past the cap");
        out_.sequence.moves.push_back(Move::add(v));
        ++out_.stage_moves[stage];
    }

    void remove(Vertex v, std::size_t stage) {
        require(current_.contains(v), "removing absent vertex " + std::to_string(v));
        require(is_deletable(g_, current_, v), "vertex " + std::to_string(v) + " is not deletable");
        current_.erase(v);
        out_.sequence.moves.push_back(Move::remove(v));
        ++out_.stage_moves[stage];
    }

private:
    const Graph& g_;
    int cap_;
    CanonicalPath& out_;
    VertexSet current_;
};

VertexSet endpoints_of(const Graph& g, const IndependentEdgeSet& ind, const std::vector<std::size_t>& edges,
                       bool u_side, bool w_side) {
    VertexSet out = g.empty_set();
    for (std::size_t i : edges) {
        if (u_side) out.insert(ind.u(i));
        if (w_side) out.insert(ind.w(i));
    }
    return out;
}

} // namespace

CanonicalPath reconfigure_to_canonical(const Graph& g, const IndependentEdgeSet& ind, const VertexSet& s) {
    const int n = g.order();
    const int m = ind.m();
    const int cap = n - m;
    if (ind.u_side().universe() != static_cast<std::size_t>(n)) {
        throw PreconditionError("independent edge set belongs to a graph of a different order");
    }
    for (const Edge& e : ind.pairs()) {
        if (!g.adjacent(e.u, e.v)) throw PreconditionError("independent edge set is not made of graph edges");
    }
    if (!g.valid_set(s)) throw PreconditionError("set is over the wrong universe");
    if (static_cast<int>(s.size()) > cap) {
        throw PreconditionError("set " + to_string(s) + " has more than n - m = " + std::to_string(cap) + " vertices");
    }
    if (!is_dominating(g, s)) throw PreconditionError("set " + to_string(s) + " is not dominating");

    CanonicalPath out;
    const VertexSet target = ind.canonical_target();
    StagedWalk walk(g, s, cap, out);
    if (s == target) return out;

    // growth to S' of size n - m
    for (Vertex v = 0; v < n && static_cast<int>(walk.current().size()) < cap; ++v) {
        if (!walk.current().contains(v)) walk.add(v, 0);
    }
    EdgeClassification cls = classify_edges(walk.current(), ind);
    out.clean_after_growth = cls.clean_count();

    // clear clean edges
    while (cls.clean_count() > 0) {
        const std::size_t a = cls.clean_count();
        const std::size_t b = cls.odd_count();
        VertexSet even_vertices = endpoints_of(g, ind, cls.even, true, true);
        require(even_vertices.size() == 2 * (ind.count() - a - b), "even-edge vertex count mismatch");
        require(static_cast<int>(even_vertices.size()) > m - static_cast<int>(b),
                "fewer even-edge vertices than private-neighbour candidates");
        VertexSet candidates = deletable_vertices(g, walk.current()) & even_vertices;
        require(!candidates.empty(), "no deletable vertex in an even edge");
        walk.remove(candidates.first(), 1);
        require(static_cast<int>(walk.current().size()) == cap - 1, "size after removal is not n - m - 1");
        walk.add(ind.u(cls.clean.front()), 1);

        EdgeClassification next = classify_edges(walk.current(), ind);
        require(next.clean_count() + 1 == a, "clean edge count did not drop by one");
        cls = std::move(next);
    }
    out.u_odd_after_clean = cls.u_odd_count();

    // raise u-odd edges to m
    while (static_cast<int>(cls.u_odd_count()) < m) {
        const std::size_t c = cls.u_odd_count();
        const std::size_t d = cls.w_odd_count();
        VertexSet even_w = endpoints_of(g, ind, cls.even, false, true);
        require(even_w.size() == ind.count() - c - d, "even edge count mismatch");
        require(static_cast<int>(even_w.size()) > m - static_cast<int>(c) - static_cast<int>(d),
                "fewer even W vertices than outsider candidates");
        VertexSet candidates = deletable_vertices(g, walk.current()) & even_w;
        require(!candidates.empty(), "no deletable W vertex in an even edge");
        walk.remove(candidates.first(), 2);
        require(static_cast<int>(walk.current().size()) == cap - 1, "size after removal is not n - m - 1");

        Vertex outsider = (ind.outsiders() - walk.current()).first();
        if (outsider >= 0) {
            walk.add(outsider, 2);
        } else {
            require(!cls.w_odd.empty(), "no outsider and no w-odd edge to add from");
            walk.add(ind.u(cls.w_odd.front()), 2);
        }

        EdgeClassification next = classify_edges(walk.current(), ind);
        require(next.u_odd_count() == c + 1, "u-odd edge count did not rise by one");
        require(next.clean_count() == 0, "a clean edge reappeared");
        cls = std::move(next);
    }

    // drop the last W vertex
    VertexSet left_in_w = walk.current() & ind.w_side();
    require(left_in_w.size() == 1, "expected exactly one W vertex before the last step");
    walk.remove(left_in_w.first(), 3);
    require(walk.current() == target, "walk did not end at V(G) - W");

    out.bound = static_cast<std::size_t>(cap - static_cast<int>(s.size())) + 2 * out.clean_after_growth +
                2 * static_cast<std::size_t>(m - static_cast<int>(out.u_odd_after_clean)) + 1;
    require(out.sequence.length() <= out.bound, "walk is longer than its explicit bound");
    return out;
}

ReconfigSequence reconfigure_pair(const Graph& g, const IndependentEdgeSet& ind, const VertexSet& a,
                                  const VertexSet& b) {
    const int cap = g.order() - ind.m();
    if (a == b) {
        reconfigure_to_canonical(g, ind, a); // precondition checks only
        return ReconfigSequence{a, {}, cap};
    }
    auto to_target = reconfigure_to_canonical(g, ind, a);
    auto from_target = reversed(reconfigure_to_canonical(g, ind, b).sequence);
    return concatenate(to_target.sequence, from_target);
}

} // namespace domreconf
