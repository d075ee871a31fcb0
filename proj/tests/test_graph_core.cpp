#include <doctest.h>

#include <string>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"
#include "domreconf/families.hpp"
#include "domreconf/graph.hpp"
#include "domreconf/matching.hpp"
#include "domreconf/random.hpp"
#include "oracles.hpp"

using namespace domreconf;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

} // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.size() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
    CHECK(s.next_after(0) == 64);
    CHECK(s.next_after(129) == -1);
    CHECK(s.complement().size() == 127);
    CHECK(to_string(VertexSet(4, {1, 2})) == "{2,3}");
    CHECK(parse_vertex_set("{2, 3}", 4) == VertexSet(4, {1, 2}));
    CHECK(parse_vertex_set("{}", 4).empty());
    CHECK_THROWS_AS(parse_vertex_set("{5}", 4), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("{1,1}", 4), ParseError);
    CHECK_THROWS_AS(parse_vertex_set("1,2", 4), ParseError);
    CHECK_THROWS_AS(s.insert(130), PreconditionError);
}

TEST_CASE("lexicographic order on member lists") {
    CHECK(lex_less(VertexSet(5, {0, 1}), VertexSet(5, {0, 2})));
    CHECK(lex_less(VertexSet(5, {0, 2}), VertexSet(5, {1})));
    CHECK(lex_less(VertexSet(5, {0}), VertexSet(5, {0, 1})));
    CHECK_FALSE(lex_less(VertexSet(5, {1}), VertexSet(5, {1})));
    CHECK(canonical_less(VertexSet(5, {4}), VertexSet(5, {0, 1})));

    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        auto a = uniform_below(rng, 1U << 10);
        auto b = uniform_below(rng, 1U << 10);
        CHECK(lex_less(oracle::to_set(a, 10), oracle::to_set(b, 10)) == oracle::mask_lex_less(a, b));
    }
}

TEST_CASE("parse_graph") {
    Graph g = parse_graph("p ds 2 1\ne 1 2\n");
    CHECK(g.order() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});

    Graph empty = parse_graph("c no edges here\np ds 3 0\n");
    CHECK(empty.order() == 3);
    CHECK(empty.edge_count() == 0);

    auto error_line = [](const std::string& text) -> std::size_t {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK_THROWS_WITH_AS(parse_graph("e 1 1"), doctest::Contains("self-loop"), ParseError);
    CHECK(error_line("p ds 3 2\ne 1 2\ne 2 1\n") == 3);
    CHECK(error_line("p ds 3 1\ne 1 4\n") == 2);
    CHECK(error_line("p ds x 1\n") == 1);
    CHECK(error_line("c hi\np ds 3 2\ne 1 2\n") == 3);
    CHECK_THROWS_AS(parse_graph("c only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("p ds 3 1\nq 1 2\n"), ParseError);
}

TEST_CASE("graph rejects non-simple edges") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("serialize/parse round trip") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 20));
        Graph g = random_graph(n, rng, 1, 3);
        std::string text = serialize_graph(g);
        Graph back = parse_graph(text);
        CHECK(back == g);
        CHECK(serialize_graph(back) == text);
        // symmetric adjacency
        for (const Edge& e : g.edges()) CHECK(g.adjacent(e.v, e.u));
    }
    // emitted edges are sorted even if the input was not
    Graph g = parse_graph("p ds 4 3\ne 4 3\ne 2 1\ne 3 1\n");
    CHECK(serialize_graph(g) == "p ds 4 3\ne 1 2\ne 1 3\ne 3 4\n");
}

TEST_CASE("is_dominating") {
    Graph p4 = gen_path(4);
    CHECK(is_dominating(p4, p4.make_set({1, 2})));
    CHECK_FALSE(is_dominating(p4, p4.make_set({0})));
    CliqueFamily g23(2, 3);
    CHECK(is_dominating(g23.graph(), g23.outer_clique()));
    // isolated vertices must be in every dominating set
    Graph iso(3, {{0, 1}});
    CHECK_FALSE(is_dominating(iso, iso.make_set({0})));
    CHECK(is_dominating(iso, iso.make_set({0, 2})));
}

TEST_CASE("private_neighbourhood") {
    Graph p4 = gen_path(4);
    CHECK(private_neighbourhood(p4, p4.make_set({1, 2}), 1) == p4.make_set({0}));
    Graph k3 = triangle();
    CHECK(private_neighbourhood(k3, k3.make_set({0, 1}), 0).empty());
    CHECK(private_neighbourhood(p4, p4.make_set({0, 1, 2, 3}), 1).empty());
    CHECK_THROWS_AS(private_neighbourhood(p4, p4.make_set({1, 2}), 0), PreconditionError);
}

TEST_CASE("is_deletable") {
    Graph p4 = gen_path(4);
    CHECK(is_deletable(p4, p4.make_set({0, 1, 2}), 1));
    CHECK_FALSE(is_deletable(p4, p4.make_set({1, 2}), 1));
    Graph k3 = triangle();
    CHECK(is_deletable(k3, k3.make_set({0, 1}), 0));
}

TEST_CASE("deletability matches the domination oracle on random triples") {
    Rng rng(2024);
    int checked = 0;
    while (checked < 10000) {
        int n = 2 + static_cast<int>(uniform_below(rng, 15));
        Graph g = random_graph(n, rng, 1 + static_cast<int>(uniform_below(rng, 3)), 5);
        oracle::SmallGraph sg(g);
        VertexSet s = g.empty_set();
        for (Vertex v = 0; v < n; ++v) {
            if (uniform_below(rng, 2) == 1) s.insert(v);
        }
        if (!is_dominating(g, s) || s.empty()) continue;
        VertexSet fast = deletable_vertices(g, s);
        s.for_each([&](Vertex v) {
            bool truth = sg.dominating(oracle::to_mask(s) & ~(oracle::Mask{1} << v));
            CHECK(is_deletable(g, s, v) == truth);
            CHECK(fast.contains(v) == truth);
            VertexSet priv = private_neighbourhood(g, s, v);
            CHECK_FALSE(priv.intersects(s));
            priv.for_each([&](Vertex u) { CHECK(g.adjacent(u, v)); });
            ++checked;
        });
    }
}

TEST_CASE("domination is monotone") {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 12));
        Graph g = random_graph(n, rng, 1, 3);
        VertexSet s = random_minimal_dominating_set(g, rng);
        REQUIRE(is_dominating(g, s));
        VertexSet t = s;
        for (Vertex v = 0; v < n; ++v) {
            if (uniform_below(rng, 2) == 1) t.insert(v);
        }
        CHECK(is_dominating(g, t));
    }
}

TEST_CASE("is_minimal_dominating") {
    Graph p4 = gen_path(4);
    CHECK(is_minimal_dominating(p4, p4.make_set({1, 2})));
    CHECK_FALSE(is_minimal_dominating(p4, p4.make_set({0, 1, 2})));
    CliqueFamily g23(2, 3);
    CHECK(is_minimal_dominating(g23.graph(),
                                g23.graph().make_set({g23.inner(1, 2), g23.inner(1, 3), g23.inner(2, 1)})));
}

TEST_CASE("gamma and big_gamma on named graphs") {
    CHECK(gamma(triangle()).size == 1);
    CHECK(gamma(triangle()).witness == VertexSet(3, {0}));
    CHECK(gamma(gen_path(4)).size == 2);
    CHECK(gamma(gen_path(4)).witness == VertexSet(4, {0, 2}));
    CHECK(big_gamma(triangle()).size == 1);
    CHECK(big_gamma(CliqueFamily(2, 3).graph()).size == 3);
    CHECK(big_gamma(gen_path(6)).size == 3);
    CHECK(gamma(Graph(0)).size == 0);
    CHECK(gamma(Graph(3)).size == 3);
    CHECK(big_gamma(Graph(3)).size == 3);
}

TEST_CASE("gamma of one ladder is six") {
    LadderGraph g1(1);
    auto result = gamma(g1.graph());
    CHECK(result.size == 6);
    CHECK(is_dominating(g1.graph(), result.witness));
}

TEST_CASE("gamma and big_gamma agree with exhaustive search") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 12));
        Graph g = random_graph(n, rng, 1 + static_cast<int>(uniform_below(rng, 3)), 6);
        oracle::SmallGraph sg(g);
        auto lo = gamma(g);
        auto hi = big_gamma(g);
        auto lo_ref = oracle::gamma(sg);
        auto hi_ref = oracle::big_gamma(sg);
        CHECK(lo.size == lo_ref.size);
        CHECK(oracle::to_mask(lo.witness) == lo_ref.witness);
        CHECK(hi.size == hi_ref.size);
        CHECK(oracle::to_mask(hi.witness) == hi_ref.witness);
        CHECK(lo.size <= hi.size);
    }
}

TEST_CASE("enumeration limits") {
    Graph big(200);
    CHECK_THROWS_AS(gamma(big), ResourceError);
    EnumerationLimits tight;
    tight.max_search_nodes = 5;
    CHECK_THROWS_AS(big_gamma(gen_path(12), tight), ResourceError);
}

TEST_CASE("find_independent_edges") {
    auto p4 = find_independent_edges(gen_path(4), 2);
    CHECK(p4.count() == 2);
    CHECK(p4.pairs()[0] == Edge{0, 1});
    CHECK(p4.pairs()[1] == Edge{2, 3});
    CHECK(p4.canonical_target() == VertexSet(4, {0, 2}));

    CHECK_THROWS_AS(find_independent_edges(triangle(), 2), NotFoundError);

    auto p6 = find_independent_edges(gen_path(6), 3);
    CHECK(p6.pairs()[0] == Edge{0, 1});
    CHECK(p6.pairs()[1] == Edge{2, 3});
    CHECK(p6.pairs()[2] == Edge{4, 5});
    CHECK(p6.outsiders().empty());
    CHECK_THROWS_AS(find_independent_edges(gen_path(4), 0), PreconditionError);
}

TEST_CASE("greedy shortfall falls back to exact matching") {
    // greedy takes {0,1} and stops; the maximum matching is {0,2},{1,3}
    Graph g(4, {{0, 1}, {0, 2}, {1, 3}});
    auto ind = find_independent_edges(g, 2);
    CHECK(ind.count() == 2);
    CHECK_THROWS_AS(find_independent_edges(g, 2, 1), ResourceError);
}

TEST_CASE("independent edges are valid and maximum matching agrees with brute force") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(uniform_below(rng, 12));
        Graph g = random_graph(n, rng, 1, 4);
        int best = oracle::matching_size(g);
        CHECK(static_cast<int>(maximum_matching_size(g)) == best);
        if (best == 0) continue;
        auto ind = find_independent_edges(g, static_cast<std::size_t>(best));
        VertexSet used = g.empty_set();
        for (const Edge& e : ind.pairs()) {
            CHECK(g.adjacent(e.u, e.v));
            CHECK_FALSE(used.contains(e.u));
            CHECK_FALSE(used.contains(e.v));
            used.insert(e.u);
            used.insert(e.v);
        }
        CHECK((ind.u_side() | ind.w_side() | ind.outsiders()) == g.all_vertices());
        CHECK_FALSE(ind.u_side().intersects(ind.w_side()));
        CHECK_THROWS_AS(find_independent_edges(g, static_cast<std::size_t>(best + 1)), NotFoundError);
    }
}

TEST_CASE("independent edge set validation") {
    Graph p4 = gen_path(4);
    CHECK_THROWS_AS(IndependentEdgeSet(p4, {{0, 1}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(IndependentEdgeSet(p4, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(IndependentEdgeSet(p4, {}), PreconditionError);
}

TEST_CASE("dominating transversals") {
    // one vertex from each of {0,1} and {2,3}, checked against all four choices
    Graph p4 = gen_path(4);
    std::vector<VertexSet> groups{p4.make_set({0, 1}), p4.make_set({2, 3})};
    std::vector<VertexSet> found;
    auto count = for_each_dominating_transversal(p4, groups, [&](const VertexSet& s) { found.push_back(s); });
    CHECK(count == found.size());
    oracle::SmallGraph sg(p4);
    std::size_t expected = 0;
    for (Vertex a : {0, 1}) {
        for (Vertex b : {2, 3}) {
            if (sg.dominating((oracle::Mask{1} << a) | (oracle::Mask{1} << b))) ++expected;
        }
    }
    CHECK(found.size() == expected);
    for (const auto& s : found) CHECK(is_dominating(p4, s));
}
