#include "domreconf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"
#include "domreconf/matching.hpp"
#include "domreconf/random.hpp"
#include "domreconf/reconfig.hpp"
#include "domreconf/search.hpp"
#include "domreconf/sequence.hpp"

namespace domreconf {

namespace {

// Collects sub-assertions and evidence for one report. Every expect() is
// evaluated; only the first failure is kept as the detail line.
class Checker {
public:
    explicit Checker(ClaimReport& report) : report_(report) {}

    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && failed_.empty()) failed_ = what;
    }

    template <typename T>
    void record(const std::string& key, const T& value) {
        std::ostringstream out;
        out << value;
        report_.evidence.emplace_back(key, out.str());
    }

    void record_list(const std::string& key, const std::vector<int>& values) {
        std::string text;
        for (std::size_t i = 0; i < values.size(); ++i) text += (i ? "," : "") + std::to_string(values[i]);
        report_.evidence.emplace_back(key, text);
    }

    void finish() {
        if (checked_ == 0) {
            report_.verdict = Verdict::fail;
            report_.detail = "no sub-assertion evaluated";
        } else if (failed_.empty()) {
            report_.verdict = Verdict::pass;
        } else {
            report_.verdict = Verdict::fail;
            report_.detail = failed_;
        }
    }

private:
    ClaimReport& report_;
    std::size_t checked_ = 0;
    std::string failed_;
};

std::int64_t param(const ClaimParams& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw PreconditionError("missing parameter '" + key + "'");
    return it->second;
}

int iparam(const ClaimParams& params, const std::string& key, std::int64_t lo, std::int64_t hi) {
    auto value = param(params, key);
    if (value < lo || value > hi) {
        throw PreconditionError("parameter " + key + "=" + std::to_string(value) + " outside [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + "]");
    }
    return static_cast<int>(value);
}

LadderGraph make_ladder(int n, const VerifyOptions& options) {
    LadderGraph g(n);
    if (options.ladder_mutation) options.ladder_mutation(g);
    return g;
}

// Each internal vertex of a vertical-pair gadget sees only its own gadget, so
// every dominating set has a vertex in every such gadget. Checks that premise
// on the graph actually built.
bool gadgets_force_one_vertex(const LadderGraph& g) {
    for (const auto& gadget : g.vertical_pair_gadgets()) {
        bool forced = false;
        gadget.for_each([&](Vertex v) {
            if (g.graph().closed_neighbourhood(v).is_subset_of(gadget)) forced = true;
        });
        if (!forced) return false;
    }
    return true;
}

// The twelve-move walk S_1, S_1 + l_2, S_2, S_2 + r_2, S_3, ... , S_7.
std::vector<Move> single_ladder_moves(const LadderGraph& g, int j) {
    std::vector<Move> moves;
    for (int step = 0; step < 3; ++step) {
        int even = 2 * step + 2;
        moves.push_back(Move::add(g.left(j, even)));
        moves.push_back(Move::remove(g.left(j, even - 1)));
        moves.push_back(Move::add(g.right(j, even)));
        moves.push_back(Move::remove(g.right(j, even - 1)));
    }
    return moves;
}

// ---- random samples shared by thm1 and cor1 ----

struct StagedCase {
    Graph graph;
    IndependentEdgeSet ind;
    VertexSet s;
    VertexSet t;
};

// Seeded random connected graphs, every feasible m, random dominating sets
// of size at most n - m (minimal ones padded with random extra vertices).
template <typename Visit>
void for_each_staged_case(const ClaimParams& params, std::uint64_t seed, Checker& check, Visit visit) {
    const int graphs = iparam(params, "graphs", 1, 1'000'000);
    const int n_min = iparam(params, "n_min", 2, 64);
    const int n_max = iparam(params, "n_max", n_min, 64);
    Rng rng(seed);
    std::size_t cases = 0;
    std::size_t oversized = 0;
    for (int i = 0; i < graphs; ++i) {
        const int n = n_min + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
        Graph g = random_connected_graph(n, rng, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n))));
        const std::size_t nu = maximum_matching_size(g);
        for (std::size_t count = 1; count <= nu; ++count) {
            IndependentEdgeSet ind = find_independent_edges(g, count);
            const std::size_t k = static_cast<std::size_t>(n - ind.m());
            auto draw = [&]() -> std::optional<VertexSet> {
                VertexSet s = random_minimal_dominating_set(g, rng);
                if (s.size() > k) return std::nullopt;
                const std::size_t target = s.size() + uniform_below(rng, k - s.size() + 1);
                while (s.size() < target) s.insert(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n))));
                return s;
            };
            auto s = draw();
            auto t = draw();
            if (!s || !t) {
                ++oversized;
                continue;
            }
            visit(StagedCase{g, ind, *s, *t});
            ++cases;
        }
    }
    check.record("graphs", graphs);
    check.record("cases", cases);
    check.record("oversized_draws", oversized);
    check.expect(cases > 0, "no feasible (graph, m, S) case was drawn");
}

// ---- claims ----

void claim_thm1(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int bfs_max_n = iparam(params, "bfs_max_n", 0, 16);
    std::size_t validated = 0;
    std::size_t bfs_checked = 0;
    std::size_t max_length = 0;
    for_each_staged_case(params, options.seed, check, [&](const StagedCase& c) {
        const int n = c.graph.order();
        const int k = n - c.ind.m();
        const CanonicalPath path = reconfigure_to_canonical(c.graph, c.ind, c.s);
        const bool ok = !validate_sequence(c.graph, k, path.sequence) &&
                        path.sequence.end() == c.ind.canonical_target();
        check.expect(ok, "staged walk invalid on a graph with n=" + std::to_string(n));
        validated += ok ? 1 : 0;
        max_length = std::max(max_length, path.sequence.length());
        if (n <= bfs_max_n) {
            SolutionSpace space = build_space(c.graph, k, options.limits);
            const auto from = space.index_of(c.ind.canonical_target());
            const auto to = space.index_of(c.s);
            check.expect(from && to, "endpoint missing from the explicit space");
            if (!from || !to) return;
            check.expect(components(space).size() == 1, "D_(n-m) not connected for n=" + std::to_string(n));
            const int d = bfs_distances(space, *from)[*to];
            check.expect(d >= 0 && static_cast<std::size_t>(d) <= path.sequence.length(),
                         "BFS distance exceeds the staged length");
            ++bfs_checked;
        }
    });
    check.record("validated", validated);
    check.record("bfs_checked", bfs_checked);
    check.record("max_length", max_length);
}

void claim_cor1(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    std::size_t within = 0;
    double worst_ratio = 0.0;
    for_each_staged_case(params, options.seed, check, [&](const StagedCase& c) {
        const int n = c.graph.order();
        const int k = n - c.ind.m();
        const CanonicalPath a = reconfigure_to_canonical(c.graph, c.ind, c.s);
        const CanonicalPath b = reconfigure_to_canonical(c.graph, c.ind, c.t);
        const std::size_t m = static_cast<std::size_t>(c.ind.m());
        const std::size_t explicit_bound =
            c.s == c.ind.canonical_target()
                ? 0
                : (static_cast<std::size_t>(k) - c.s.size()) + 2 * a.clean_after_growth + 2 * (m - a.u_odd_after_clean) + 1;
        check.expect(a.bound == explicit_bound, "reported bound disagrees with the formula");
        check.expect(a.sequence.length() <= a.bound, "staged walk longer than its bound");
        const ReconfigSequence pair = reconfigure_pair(c.graph, c.ind, c.s, c.t);
        check.expect(!validate_sequence(c.graph, k, pair) && pair.end() == c.t, "pair walk invalid");
        check.expect(pair.length() <= a.bound + b.bound, "pair walk longer than the sum of bounds");
        // the bound itself is linear: at most n + 3m + 3 - |S| <= 3n
        check.expect(a.bound <= 3 * static_cast<std::size_t>(n), "bound exceeds 3n");
        within += a.sequence.length() <= a.bound ? 1 : 0;
        worst_ratio = std::max(worst_ratio, static_cast<double>(pair.length()) / n);
    });
    check.record("within_bound", within);
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(3) << worst_ratio;
    check.record("max_pair_length_over_n", ratio.str());
}

void claim_thm3(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int m = iparam(params, "m", 1, 12);
    const Graph p = gen_path(2 * m);
    const SolutionSpace space = build_space(p, m, options.limits);
    const auto comps = components(space);
    check.record("nodes", space.nodes().size());
    check.record("edges", space.edge_count());
    check.record("components", comps.size());
    check.record("matching", maximum_matching_size(p));
    check.expect(comps.size() >= 2, "D_m(P_2m) is connected");
    check.expect(maximum_matching_size(p) == static_cast<std::size_t>(m), "P_2m should have exactly m independent edges");
}

void claim_lem1(const ClaimParams& params, const VerifyOptions&, Checker& check) {
    const int d = iparam(params, "d", 2, 8);
    const int b = iparam(params, "b", 3, 8);
    const CliqueFamily f(d, b);
    const auto upper = big_gamma(f.graph());
    check.record("Gamma", upper.size);
    check.record("expected", d + b - 2);
    check.record("witness", to_string(upper.witness));
    check.expect(static_cast<int>(upper.size) == d + b - 2, "Gamma != d + b - 2");
    check.expect(is_minimal_dominating(f.graph(), upper.witness), "witness is not minimal dominating");
    check.expect(is_minimal_dominating(f.graph(), f.large_minimal_set()) &&
                     static_cast<int>(f.large_minimal_set().size()) == d + b - 2,
                 "constructed set of size d + b - 2 is not minimal dominating");
}

void claim_thm2(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int d = iparam(params, "d", 2, 8);
    const int b = iparam(params, "b", 3, 8);
    const CliqueFamily f(d, b);
    const int k = d + b - 1;
    const VertexSet a = f.outer_clique();
    const VertexSet sep = f.separated_set();
    check.expect(is_dominating(f.graph(), a) && static_cast<int>(a.size()) <= k, "A is not a node of the space");
    check.expect(is_minimal_dominating(f.graph(), sep) && static_cast<int>(sep.size()) <= k,
                 "B is not a minimal dominating set within the cap");
    const SolutionSpace space = build_space(f.graph(), k, options.limits);
    const auto comps = components(space);
    const auto ia = space.index_of(a);
    const auto ib = space.index_of(sep);
    check.record("k", k);
    check.record("nodes", space.nodes().size());
    check.record("components", comps.size());
    check.record("A", to_string(a));
    check.record("B", to_string(sep));
    check.expect(ia && ib, "A or B missing from the space");
    if (!ia || !ib) return;
    auto component_of = [&](std::size_t node) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (std::binary_search(comps[c].begin(), comps[c].end(), node)) return c;
        }
        return comps.size();
    };
    const std::size_t ca = component_of(*ia);
    const std::size_t cb = component_of(*ib);
    check.record("component_A", ca + 1);
    check.record("component_B", cb + 1);
    check.record("component_A_size", comps[ca].size());
    check.record("component_B_size", comps[cb].size());
    check.expect(ca != cb, "A and B share a component");
    const PathResult implicit = shortest_path(f.graph(), k, a, sep, options.limits);
    check.record("implicit_search", to_string(implicit.status));
    check.expect(implicit.status == SearchStatus::disconnected, "implicit search did not prove disconnection");
}

void claim_fact8(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const auto samples = static_cast<std::uint64_t>(iparam(params, "samples", 0, 100'000'000));
    const LadderGraph g = make_ladder(1, options);
    const auto groups = g.vertical_pair_gadgets();
    check.expect(gadgets_force_one_vertex(g), "a vertical-pair gadget does not force a vertex");

    std::set<std::vector<Vertex>> canonical;
    for (int i = 1; i <= LadderGraph::kStates; ++i) canonical.insert(g.state(1, i).members());

    // plain product of the six gadgets, no pruning
    std::vector<std::vector<Vertex>> choices;
    for (const auto& group : groups) choices.push_back(group.members());
    std::size_t candidates = 0;
    std::set<std::vector<Vertex>> found;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        VertexSet s = g.graph().empty_set();
        for (std::size_t i = 0; i < choices.size(); ++i) s.insert(choices[i][pick[i]]);
        ++candidates;
        if (is_dominating(g.graph(), s)) found.insert(s.members());
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    check.record("candidates", candidates);
    check.record("dominating", found.size());
    check.expect(found.size() == 7, "expected exactly 7 dominating sets of size 6");
    check.expect(found == canonical, "dominating sets differ from S_1..S_7");

    // unrestricted spot check: random 6-subsets that are not one-per-gadget
    std::vector<int> owner(static_cast<std::size_t>(g.graph().order()), -1);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        groups[i].for_each([&](Vertex v) { owner[static_cast<std::size_t>(v)] = static_cast<int>(i); });
    }
    Rng rng(options.seed ^ 0x8f8f8f8fULL);
    std::uint64_t outside = 0;
    std::uint64_t bad = 0;
    const auto n = static_cast<std::uint64_t>(g.graph().order());
    while (outside < samples) {
        VertexSet s = g.graph().empty_set();
        while (s.size() < 6) s.insert(static_cast<Vertex>(uniform_below(rng, n)));
        std::set<int> owners;
        s.for_each([&](Vertex v) { owners.insert(owner[static_cast<std::size_t>(v)]); });
        if (!owners.contains(-1) && owners.size() == 6) continue; // inside the restricted family
        ++outside;
        if (is_dominating(g.graph(), s) && !canonical.contains(s.members())) ++bad;
    }
    check.record("spot_checks", outside);
    check.record("spot_check_new_dominating", bad);
    check.expect(bad == 0, "random size-6 subset outside the restriction dominates");
}

void claim_lem2(const ClaimParams&, const VerifyOptions& options, Checker& check) {
    const LadderGraph g = make_ladder(1, options);
    const VertexSet s1 = g.state(1, 1);
    const VertexSet s7 = g.state(1, 7);
    const PathResult path = shortest_path(g.graph(), 7, s1, s7, options.limits);
    if (path.status == SearchStatus::resource_cap) throw ResourceError("shortest path hit the node cap", path.visited);
    const GeodesicCount geo = geodesic_count(g.graph(), 7, s1, s7, options.limits);
    if (geo.status == SearchStatus::resource_cap) throw ResourceError("geodesic count hit the node cap", geo.visited);
    check.record("distance", geo.distance);
    check.record("geodesics", geo.count);
    check.record("visited", geo.visited);
    check.expect(path.status == SearchStatus::found && path.path, "S_1 and S_7 are not connected");
    check.expect(geo.distance == 12, "distance(S_1, S_7) != 12");
    check.expect(geo.count == 1, "more than one geodesic");
    check.expect(path.path && path.path->moves == single_ladder_moves(g, 1), "geodesic differs from the explicit move list");
}

void claim_fact9(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int n = iparam(params, "n", 2, 6);
    const LadderGraph g = make_ladder(n, options);
    check.expect(gadgets_force_one_vertex(g), "a vertical-pair gadget does not force a vertex");
    std::size_t sets = 0;
    std::size_t nonstandard = 0;
    std::array<std::size_t, 3> triggered{};
    std::array<std::size_t, 3> exceptions{};
    const std::array<std::pair<int, int>, 3> rules{{{2, 7}, {4, 1}, {6, 7}}};
    for_each_dominating_transversal(g.graph(), g.vertical_pair_gadgets(), [&](const VertexSet& s) {
        ++sets;
        const auto states = decode_ladder_states(g, s);
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (!states[j].standard()) ++nonstandard;
            if (j + 1 == states.size()) continue;
            for (std::size_t r = 0; r < rules.size(); ++r) {
                if (states[j].state != rules[r].first) continue;
                ++triggered[r];
                if (states[j + 1].state != rules[r].second) ++exceptions[r];
            }
        }
    });
    check.record("size", 6 * n);
    check.record("dominating_sets", sets);
    check.record("nonstandard_ladders", nonstandard);
    for (std::size_t r = 0; r < rules.size(); ++r) {
        const std::string rule = "S" + std::to_string(rules[r].first) + "_then_S" + std::to_string(rules[r].second);
        check.record(rule + "_cases", triggered[r]);
        check.record(rule + "_exceptions", exceptions[r]);
    }
    check.expect(sets > 0, "no dominating set of size 6n");
    check.expect(nonstandard == 0, "a minimum dominating set has a ladder outside S_1..S_7");
    check.expect(exceptions[0] == 0, "S_2 not followed by S_7");
    check.expect(exceptions[1] == 0, "S_4 not followed by S_1");
    check.expect(exceptions[2] == 0, "S_6 not followed by S_7");
    check.expect(triggered[0] > 0 && triggered[1] > 0 && triggered[2] > 0, "an implication was never exercised");
}

std::int64_t theorem5_bound(int n) { return 12 * ((std::int64_t{1} << (n + 1)) - n - 2); }

// Shortest S -> T path in D_(6n+1)(G_n) with every ladder moving S_1 -> S_7.
ReconfigSequence ladder_geodesic(const LadderGraph& g, const VerifyOptions& options, Checker& check) {
    const int n = g.ladders();
    const int k = 6 * n + 1;
    const VertexSet s = g.uniform(1);
    const VertexSet t = g.uniform(7);
    check.expect(is_dominating(g.graph(), s) && is_dominating(g.graph(), t), "all-S_1 or all-S_7 is not dominating");
    const PathResult result = shortest_path(g.graph(), k, s, t, options.limits);
    check.record("k", k);
    check.record("visited", result.visited);
    check.record("search", to_string(result.status));
    if (result.status == SearchStatus::resource_cap) throw ResourceError("shortest path hit the node cap", result.visited);
    check.expect(result.status == SearchStatus::found, "S and T are not connected");
    if (!result.path) return ReconfigSequence{s, {}, k};
    check.expect(!validate_sequence(g.graph(), k, *result.path), "geodesic fails validation");
    return *result.path;
}

void claim_thm5(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int n = iparam(params, "n", 1, 12);
    const LadderGraph g = make_ladder(n, options);
    const ReconfigSequence path = ladder_geodesic(g, options, check);
    const auto bound = theorem5_bound(n);
    const auto distance = static_cast<std::int64_t>(path.length());
    check.record("bound", bound);
    check.record("distance", distance);
    if (n == 1) {
        check.expect(distance == 12, "distance != 12");
    } else {
        check.expect(distance >= bound, "distance below 12(2^(n+1) - n - 2)");
    }
}

void claim_lem3(const ClaimParams& params, const VerifyOptions& options, Checker& check) {
    const int n = iparam(params, "n", 2, 12);
    const LadderGraph g = make_ladder(n, options);
    const ReconfigSequence path = ladder_geodesic(g, options, check);
    std::vector<std::vector<LadderState>> trace;
    for (const auto& s : path.states()) trace.push_back(decode_ladder_states(g, s));
    const auto switches = count_switches(trace);
    check.record("distance", path.length());
    check.record_list("switches", switches);
    check.expect(!switches.empty() && switches[0] >= 1, "L_1 never switches");
    for (std::size_t j = 0; j + 1 < switches.size(); ++j) {
        check.expect(switches[j + 1] >= 2 * switches[j] + 1,
                     "L_" + std::to_string(j + 2) + " switches fewer than 2p + 1 times");
    }
}

void claim_cor2partition(const ClaimParams& params, const VerifyOptions&, Checker& check) {
    const int d = iparam(params, "d", 2, 8);
    const int b = iparam(params, "b", 3, 8);
    const CliqueFamily f(d, b);
    const auto parts = f.b_partition();
    VertexSet covered = f.graph().empty_set();
    bool disjoint = true;
    std::size_t internal_edges = 0;
    for (const auto& part : parts) {
        disjoint = disjoint && !covered.intersects(part);
        covered |= part;
        part.for_each([&](Vertex v) {
            for (Vertex u : f.graph().neighbours(v)) {
                if (u > v && part.contains(u)) ++internal_edges;
            }
        });
    }
    check.record("parts", parts.size());
    check.record("edges_inside_parts", internal_edges);
    check.expect(static_cast<int>(parts.size()) == b, "partition does not have b classes");
    check.expect(disjoint, "classes overlap");
    check.expect(covered == f.graph().all_vertices(), "classes do not cover V(G)");
    check.expect(internal_edges == 0, "a class contains an edge");
}

using ClaimFn = void (*)(const ClaimParams&, const VerifyOptions&, Checker&);

struct ClaimEntry {
    const char* id;
    ClaimFn fn;
    ClaimParams defaults;
};

const std::vector<ClaimEntry>& registry() {
    static const std::vector<ClaimEntry> entries{
        {"thm1", claim_thm1, {{"graphs", 200}, {"n_min", 4}, {"n_max", 14}, {"bfs_max_n", 9}}},
        {"cor1", claim_cor1, {{"graphs", 200}, {"n_min", 4}, {"n_max", 14}}},
        {"thm3", claim_thm3, {{"m", 2}}},
        {"lem1", claim_lem1, {{"d", 2}, {"b", 3}}},
        {"thm2", claim_thm2, {{"d", 2}, {"b", 3}}},
        {"fact8", claim_fact8, {{"samples", 100'000}}},
        {"lem2", claim_lem2, {}},
        {"fact9", claim_fact9, {{"n", 2}}},
        {"thm5", claim_thm5, {{"n", 1}}},
        {"lem3", claim_lem3, {{"n", 2}}},
        {"cor2partition", claim_cor2partition, {{"d", 2}, {"b", 3}}},
    };
    return entries;
}

const ClaimEntry& lookup(const std::string& id) {
    for (const auto& entry : registry()) {
        if (id == entry.id) return entry;
    }
    throw PreconditionError("unknown claim '" + id + "'");
}

} // namespace

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

const std::string* ClaimReport::find(const std::string& key) const {
    for (const auto& [k, v] : evidence) {
        if (k == key) return &v;
    }
    return nullptr;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.emplace_back(entry.id);
        return out;
    }();
    return ids;
}

ClaimReport run_claim(const std::string& claim_id, const ClaimParams& params, const VerifyOptions& options) {
    const ClaimEntry& entry = lookup(claim_id);
    ClaimParams merged = entry.defaults;
    for (const auto& [key, value] : params) {
        if (!entry.defaults.contains(key)) throw PreconditionError("claim " + claim_id + " has no parameter '" + key + "'");
        merged[key] = value;
    }
    ClaimReport report;
    report.claim_id = claim_id;
    report.params = merged;
    const auto start = std::chrono::steady_clock::now();
    try {
        Checker check(report);
        entry.fn(merged, options, check);
        check.finish();
    } catch (const ResourceError& e) {
        report.verdict = Verdict::skipped;
        report.detail = std::string("resource cap: ") + e.what();
        report.evidence.emplace_back("partial_count", std::to_string(e.partial_count()));
    }
    report.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<ClaimInstance> claim_plan(Level level) {
    const bool full = level == Level::full;
    std::vector<ClaimInstance> plan;
    plan.push_back({"thm1", {}});
    plan.push_back({"cor1", {}});
    for (int m = 2; m <= 5; ++m) plan.push_back({"thm3", {{"m", m}}});
    for (auto [d, b] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) plan.push_back({"lem1", {{"d", d}, {"b", b}}});
    for (auto [d, b] : {std::pair{2, 3}, std::pair{3, 3}}) plan.push_back({"thm2", {{"d", d}, {"b", b}}});
    plan.push_back({"fact8", {}});
    plan.push_back({"lem2", {}});
    if (full) plan.push_back({"fact9", {{"n", 2}}});
    plan.push_back({"thm5", {{"n", 1}}});
    if (full) {
        plan.push_back({"thm5", {{"n", 2}}});
        plan.push_back({"lem3", {{"n", 2}}});
    }
    for (auto [d, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
        plan.push_back({"cor2partition", {{"d", d}, {"b", b}}});
    }
    return plan;
}

std::vector<ClaimReport> run_all(Level level, const VerifyOptions& options, unsigned threads,
                                 const std::vector<std::string>& only) {
    std::vector<ClaimInstance> plan;
    for (auto& item : claim_plan(level)) {
        if (only.empty() || std::find(only.begin(), only.end(), item.claim_id) != only.end()) plan.push_back(item);
    }
    for (const auto& id : only) lookup(id);

    std::vector<ClaimReport> reports(plan.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < plan.size(); i = next++) {
            reports[i] = run_claim(plan[i].claim_id, plan[i].params, options);
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(plan.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

int overall_status(const std::vector<ClaimReport>& reports) {
    bool skipped = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fail) return 1;
        skipped = skipped || r.verdict == Verdict::skipped;
    }
    return skipped ? 3 : 0;
}

std::string describe_params(const ClaimParams& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ' ';
        out += key + "=" + std::to_string(value);
    }
    return out.empty() ? "-" : out;
}

std::string format_table(const std::vector<ClaimReport>& reports, bool with_runtime) {
    std::size_t id_width = 5;
    std::size_t param_width = 6;
    for (const auto& r : reports) {
        id_width = std::max(id_width, r.claim_id.size());
        param_width = std::max(param_width, describe_params(r.params).size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(id_width)) << "claim" << "  " << std::setw(static_cast<int>(param_width))
        << "params" << "  " << std::setw(7) << "verdict";
    if (with_runtime) out << "  " << std::setw(9) << "seconds";
    out << "  evidence\n";
    for (const auto& r : reports) {
        out << std::setw(static_cast<int>(id_width)) << r.claim_id << "  " << std::setw(static_cast<int>(param_width))
            << describe_params(r.params) << "  " << std::setw(7) << to_string(r.verdict);
        if (with_runtime) out << "  " << std::setw(9) << std::fixed << std::setprecision(3) << r.runtime;
        out << " ";
        for (const auto& [key, value] : r.evidence) out << ' ' << key << '=' << value;
        if (!r.detail.empty()) out << "  [" << r.detail << ']';
        out << '\n';
    }
    int status = overall_status(reports);
    out << (status == 0 ? "all claims pass" : status == 1 ? "some claims FAIL" : "no failures, some claims skipped") << '\n';
    return out.str();
}

std::string format_json(const std::vector<ClaimReport>& reports, bool with_runtime) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json item;
        item["id"] = r.claim_id;
        item["params"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.params) item["params"][key] = value;
        item["verdict"] = to_string(r.verdict);
        item["evidence"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.evidence) item["evidence"][key] = value;
        if (!r.detail.empty()) item["detail"] = r.detail;
        if (with_runtime) item["runtime"] = r.runtime;
        out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

} // namespace domreconf
