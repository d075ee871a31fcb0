#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/matching.hpp"
#include "domreconf/sequence.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

// Status of each independent edge {u_i, w_i} relative to a set S.
struct EdgeClassification {
    std::vector<std::size_t> clean; // neither endpoint in S
    std::vector<std::size_t> u_odd; // only u_i in S
    std::vector<std::size_t> w_odd; // only w_i in S
    std::vector<std::size_t> even;  // both endpoints in S

    std::size_t clean_count() const noexcept { return clean.size(); }
    std::size_t u_odd_count() const noexcept { return u_odd.size(); }
    std::size_t w_odd_count() const noexcept { return w_odd.size(); }
    std::size_t odd_count() const noexcept { return u_odd.size() + w_odd.size(); }
    std::size_t even_count() const noexcept { return even.size(); }
};

EdgeClassification classify_edges(const VertexSet& s, const IndependentEdgeSet& ind);

// Result of the staged walk S -> N = V(G) - W under cap k = n - m.
struct CanonicalPath {
    ReconfigSequence sequence;
    // moves spent growing to S', clearing clean edges, raising u-odd edges,
    // and dropping the last W vertex
    std::array<std::size_t, 4> stage_moves{};
    std::size_t clean_after_growth = 0; // clean(S')
    std::size_t u_odd_after_clean = 0;  // u-odd(S_0)
    // (n - m - |S|) + 2 clean(S') + 2 (m - u-odd(S_0)) + 1
    std::size_t bound = 0;
};

// Walks from s to V(G) - W: grow to size n - m, then turn every clean edge odd
// (delete a deletable even-edge vertex, add the u-end of the lowest clean
// edge), then turn even edges u-odd (delete a deletable W vertex of an even
// edge, add an outsider or the u-end of a w-odd edge), then delete the last
// W vertex. Throws PreconditionError on bad input and InvariantError if a
// counting guarantee ever fails.
CanonicalPath reconfigure_to_canonical(const Graph& g, const IndependentEdgeSet& ind, const VertexSet& s);

// a -> N -> b. Empty when a == b.
ReconfigSequence reconfigure_pair(const Graph& g, const IndependentEdgeSet& ind, const VertexSet& a,
                                  const VertexSet& b);

} // namespace domreconf
