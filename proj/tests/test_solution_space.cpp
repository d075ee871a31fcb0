#include <doctest.h>

#include <algorithm>
#include <set>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"
#include "domreconf/families.hpp"
#include "domreconf/random.hpp"
#include "domreconf/search.hpp"
#include "domreconf/sequence.hpp"
#include "domreconf/solution_space.hpp"
#include "oracles.hpp"

using namespace domreconf;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

} // namespace

TEST_CASE("space_neighbours") {
    Graph k3 = triangle();
    CHECK(space_neighbours(k3, 2, k3.make_set({0})) ==
          std::vector<VertexSet>{k3.make_set({0, 1}), k3.make_set({0, 2})});
    Graph p4 = gen_path(4);
    CHECK(space_neighbours(p4, 2, p4.make_set({1, 2})).empty());
    CHECK(space_neighbours(k3, 2, k3.make_set({0, 1})) ==
          std::vector<VertexSet>{k3.make_set({1}), k3.make_set({0})});
    CHECK_THROWS_AS(space_neighbours(p4, 2, p4.make_set({0})), PreconditionError);
    CHECK_THROWS_AS(space_neighbours(p4, 1, p4.make_set({1, 2})), PreconditionError);
}

TEST_CASE("S_1 in D_7(G_1) has 51 additions and no deletions") {
    LadderGraph g1(1);
    VertexSet s1 = g1.state(1, 1);
    auto next = space_neighbours(g1.graph(), 7, s1);
    CHECK(next.size() == 51);
    for (const auto& t : next) {
        CHECK(t.size() == 7);
        CHECK(s1.is_subset_of(t));
    }
}

TEST_CASE("build_space on small graphs") {
    auto k3_1 = build_space(triangle(), 1);
    CHECK(k3_1.nodes().size() == 3);
    CHECK(k3_1.edge_count() == 0);
    CHECK(components(k3_1).size() == 3);
    for (const auto& c : component_diameter(k3_1)) CHECK(c.diameter == 0);

    auto k3_2 = build_space(triangle(), 2);
    CHECK(k3_2.nodes().size() == 6);
    CHECK(k3_2.edge_count() == 6);
    CHECK(components(k3_2).size() == 1);
    auto diam = component_diameter(k3_2);
    REQUIRE(diam.size() == 1);
    // D_2(K_3) is a 6-cycle: {1} and {2,3} are three moves apart
    CHECK(diam[0].diameter == 3);

    auto p6 = build_space(gen_path(6), 3);
    CHECK(p6.nodes().size() == 11);
    CHECK(p6.edge_count() == 4);
    CHECK(components(p6).size() == 7);

    auto p4 = build_space(gen_path(4), 4);
    CHECK(p4.nodes().size() == 9);
    CHECK(p4.edge_count() == 12);
    auto p4d = component_diameter(p4);
    REQUIRE(p4d.size() == 1);
    CHECK(p4d[0].diameter == 4);

    CHECK(components(build_space(gen_path(4), 2)).size() == 4);
    CHECK(components(build_space(gen_path(8), 4)).size() == 10);
    auto p10 = build_space(gen_path(10), 5);
    CHECK(p10.nodes().size() == 83);
    CHECK(p10.edge_count() == 78);
    CHECK(components(p10).size() == 13);
}

TEST_CASE("build_space node order is by size then lexicographic") {
    auto space = build_space(gen_path(5), 4);
    for (std::size_t i = 1; i < space.nodes().size(); ++i) {
        CHECK(canonical_less(space.nodes()[i - 1], space.nodes()[i]));
    }
}

TEST_CASE("build_space resource cap carries a partial count") {
    SearchLimits limits;
    limits.max_nodes = 10;
    try {
        build_space(gen_path(10), 6, limits);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.partial_count() > 0);
        CHECK(e.partial_count() <= 11);
    }
}

TEST_CASE("clique family A and B are separated in D_4(G_(2,3))") {
    CliqueFamily f(2, 3);
    auto space = build_space(f.graph(), 4);
    auto comps = components(space);
    auto ia = space.index_of(f.outer_clique());
    auto ib = space.index_of(f.separated_set());
    REQUIRE(ia);
    REQUIRE(ib);
    auto which = [&](std::size_t node) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (std::binary_search(comps[c].begin(), comps[c].end(), node)) return c;
        }
        return comps.size();
    };
    CHECK(which(*ia) != which(*ib));

    auto result = shortest_path(f.graph(), 4, f.outer_clique(), f.separated_set());
    CHECK(result.status == SearchStatus::disconnected);
    CHECK_FALSE(result.path);
}

TEST_CASE("explicit space agrees with brute force on random graphs") {
    Rng rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(uniform_below(rng, 9));
        Graph g = random_graph(n, rng, 1, 3);
        int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        oracle::SmallGraph sg(g);
        oracle::Space ref(sg, k);
        auto space = build_space(g, k);
        REQUIRE(space.nodes().size() == ref.nodes.size());
        CHECK(space.edge_count() == ref.edge_count());
        CHECK(components(space).size() == ref.component_count());
        std::set<oracle::Mask> expected(ref.nodes.begin(), ref.nodes.end());
        for (std::size_t i = 0; i < space.nodes().size(); ++i) {
            const auto& node = space.nodes()[i];
            CHECK(expected.count(oracle::to_mask(node)) == 1);
            CHECK(is_dominating(g, node));
            CHECK(static_cast<int>(node.size()) <= k);
            for (auto j : space.adjacency()[i]) {
                CHECK(node.symmetric_difference_size(space.nodes()[j]) == 1);
                const auto& back = space.adjacency()[j];
                CHECK(std::find(back.begin(), back.end(), i) != back.end());
            }
        }
        // diameters against oracle all-pairs BFS
        for (const auto& comp : component_diameter(space)) {
            int best = 0;
            for (auto x : comp.nodes) {
                auto d = ref.distances(ref.index.at(oracle::to_mask(space.nodes()[x])));
                for (auto y : comp.nodes) best = std::max(best, d[ref.index.at(oracle::to_mask(space.nodes()[y]))]);
            }
            CHECK(comp.diameter == best);
        }
    }
}

TEST_CASE("implicit search agrees with the explicit space") {
    Rng rng(77);
    int pairs = 0;
    while (pairs < 300) {
        int n = 2 + static_cast<int>(uniform_below(rng, 8));
        Graph g = random_graph(n, rng, 1, 3);
        int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        oracle::SmallGraph sg(g);
        oracle::Space ref(sg, k);
        if (ref.nodes.empty()) continue;
        auto a = ref.nodes[uniform_below(rng, ref.nodes.size())];
        auto b = ref.nodes[uniform_below(rng, ref.nodes.size())];
        VertexSet sa = oracle::to_set(a, n);
        VertexSet sb = oracle::to_set(b, n);
        int truth = ref.distance(a, b);

        auto result = shortest_path(g, k, sa, sb);
        if (truth < 0) {
            CHECK(result.status == SearchStatus::disconnected);
        } else {
            REQUIRE(result.status == SearchStatus::found);
            REQUIRE(result.path);
            CHECK(static_cast<int>(result.path->length()) == truth);
            CHECK(result.path->start == sa);
            CHECK(result.path->end() == sb);
            CHECK_FALSE(validate_sequence(g, k, *result.path));
        }

        auto count = geodesic_count(g, k, sa, sb);
        if (truth < 0) {
            CHECK(count.status == SearchStatus::disconnected);
            CHECK(count.count == 0);
        } else {
            CHECK(count.status == SearchStatus::found);
            CHECK(count.distance == truth);
            CHECK(count.count == ref.geodesics(a, b));
            CHECK(count.count >= 1);
        }

        auto reach = reachable_component(g, k, sa);
        auto da = ref.distances(ref.index.at(a));
        std::size_t expected = static_cast<std::size_t>(std::count_if(da.begin(), da.end(), [](int d) { return d >= 0; }));
        CHECK(reach.size() == expected);
        for (const auto& s : reach) CHECK(da[ref.index.at(oracle::to_mask(s))] >= 0);
        ++pairs;
    }
}

TEST_CASE("shortest path is deterministic and handles trivial requests") {
    Graph k3 = triangle();
    auto same = shortest_path(k3, 2, k3.make_set({0}), k3.make_set({0}));
    CHECK(same.status == SearchStatus::found);
    CHECK(same.path->length() == 0);
    auto g = geodesic_count(k3, 2, k3.make_set({0}), k3.make_set({0}));
    CHECK(g.count == 1);
    CHECK(g.distance == 0);

    auto k3path = geodesic_count(k3, 2, k3.make_set({0}), k3.make_set({1}));
    CHECK(k3path.distance == 2);
    CHECK(k3path.count == 1);

    auto p1 = shortest_path(gen_path(6), 4, VertexSet(6, {1, 4}), VertexSet(6, {0, 3, 4}));
    auto p2 = shortest_path(gen_path(6), 4, VertexSet(6, {1, 4}), VertexSet(6, {0, 3, 4}));
    REQUIRE(p1.path);
    CHECK(p1.path->length() == 3);
    CHECK(p1.path->moves == p2.path->moves);

    CHECK(reachable_component(k3, 1, k3.make_set({0})) == std::vector<VertexSet>{k3.make_set({0})});
    CHECK_THROWS_AS(shortest_path(k3, 1, k3.make_set({0, 1}), k3.make_set({0})), PreconditionError);
}

TEST_CASE("search respects the node cap") {
    SearchLimits tiny;
    tiny.max_nodes = 3;
    Graph p = gen_path(8);
    auto result = shortest_path(p, 6, VertexSet(8, {1, 4, 6}), VertexSet(8, {0, 2, 3, 5, 7}), tiny);
    CHECK(result.status == SearchStatus::resource_cap);
    CHECK_FALSE(result.path);
    CHECK_THROWS_AS(reachable_component(p, 6, VertexSet(8, {1, 4, 6}), tiny), ResourceError);
}

TEST_CASE("adding vertices walks straight up (A subset of B)") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(uniform_below(rng, 10));
        Graph g = random_graph(n, rng, 1, 3);
        VertexSet a = random_minimal_dominating_set(g, rng);
        VertexSet b = a;
        for (Vertex v = 0; v < n; ++v) {
            if (uniform_below(rng, 3) == 0) b.insert(v);
        }
        int k = static_cast<int>(b.size());
        auto result = shortest_path(g, k, a, b);
        REQUIRE(result.status == SearchStatus::found);
        CHECK(result.path->length() == (b - a).size());
        for (const auto& m : result.path->moves) CHECK(m.kind == MoveKind::add);
    }
}

TEST_CASE("component of S_1 in D_7(G_1)") {
    LadderGraph g1(1);
    auto comp = reachable_component(g1.graph(), 7, g1.state(1, 1));
    // the seven states plus all of their one-vertex supersets
    std::set<std::vector<Vertex>> expected;
    for (int i = 1; i <= 7; ++i) {
        VertexSet s = g1.state(1, i);
        expected.insert(s.members());
        for (Vertex v = 0; v < g1.graph().order(); ++v) {
            if (!s.contains(v)) expected.insert(s.with(v).members());
        }
    }
    CHECK(expected.size() == 358);
    CHECK(comp.size() == 358);
    for (const auto& s : comp) CHECK(expected.count(s.members()) == 1);
}

TEST_CASE("export_space format") {
    auto space = build_space(triangle(), 2);
    std::string text = export_space(space);
    CHECK(text.rfind("node 1 {1}\n", 0) == 0);
    CHECK(text.find("arc 1 4\n") != std::string::npos);
}
