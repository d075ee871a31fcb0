// domreconf: command-line front end.
//
// Exit codes: 0 ok / pass, 1 negative answer (not connected, claim failed,
// sequence invalid), 2 usage or input error, 3 resource cap, 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"
#include "domreconf/families.hpp"
#include "domreconf/matching.hpp"
#include "domreconf/reconfig.hpp"
#include "domreconf/search.hpp"
#include "domreconf/sequence.hpp"
#include "domreconf/solution_space.hpp"
#include "domreconf/verify.hpp"

using namespace domreconf;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3, kInternal = 4 };

struct Common {
    std::string format = "text";
    std::string output;
    std::optional<std::size_t> limit_nodes;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;

    bool structured() const { return format == "structured"; }

    SearchLimits limits() const {
        SearchLimits limits = SearchLimits::from_environment();
        if (limit_nodes) limits.max_nodes = *limit_nodes;
        return limits;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

// Writes to --output when given, else to stdout.
void emit(const Common& common, const std::string& text) {
    if (common.output.empty()) {
        std::cout << text;
    } else {
        write_file(common.output, text);
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "{1,2,3}" inline, otherwise a set name from the label file.
VertexSet resolve_set(const std::string& text, const Graph& g, const std::optional<FamilyLabels>& labels) {
    if (!text.empty() && text.front() == '{') return parse_vertex_set(text, static_cast<std::size_t>(g.order()));
    if (!labels) throw PreconditionError("set '" + text + "' is not inline and no --labels file was given");
    return labels->set(text);
}

std::optional<FamilyLabels> load_labels(const std::string& path, const Graph& g) {
    if (path.empty()) return std::nullopt;
    return parse_labels(read_file(path), static_cast<std::size_t>(g.order()));
}

json set_json(const VertexSet& s) {
    json arr = json::array();
    s.for_each([&](Vertex v) { arr.push_back(v + 1); });
    return arr;
}

// ---- gen ----

struct GenArgs {
    std::string family;
    int d = 2;
    int b = 3;
    int n = 1;
    std::string labels_out;
};

int cmd_gen(const GenArgs& args, const Common& common) {
    FamilySpec spec;
    if (args.family == "clique-family") {
        spec = {FamilyKind::clique_family, args.d, args.b, 0};
    } else if (args.family == "path") {
        spec = {FamilyKind::path, 0, 0, args.n};
    } else {
        spec = {FamilyKind::ladder_graph, 0, 0, args.n};
    }
    GeneratedFamily fam = generate(spec);
    const std::vector<std::string> comments{spec.describe()};
    emit(common, serialize_graph(fam.graph, comments));
    std::string labels_path = args.labels_out;
    if (labels_path.empty() && !common.output.empty()) labels_path = common.output + ".labels";
    if (!labels_path.empty()) write_file(labels_path, serialize_labels(fam.labels));
    return kOk;
}

// ---- analyze ----

int cmd_analyze(const std::string& graph_path, const Common& common) {
    Graph g = read_graph_file(graph_path);
    auto lo = gamma(g);
    auto hi = big_gamma(g);
    std::size_t matching = maximum_matching_size(g);
    if (common.structured()) {
        json j;
        j["vertices"] = g.order();
        j["edges"] = g.edge_count();
        j["gamma"] = lo.size;
        j["gamma_witness"] = set_json(lo.witness);
        j["upper_gamma"] = hi.size;
        j["upper_gamma_witness"] = set_json(hi.witness);
        j["matching"] = matching;
        emit(common, dump(j));
    } else {
        std::ostringstream out;
        out << "vertices " << g.order() << "\nedges " << g.edge_count() << "\ngamma " << lo.size << ' '
            << to_string(lo.witness) << "\nGamma " << hi.size << ' ' << to_string(hi.witness) << "\nmatching "
            << matching << '\n';
        emit(common, out.str());
    }
    return kOk;
}

// ---- space ----

struct SpaceArgs {
    std::string graph;
    int k = 0;
    std::string labels;
    std::string export_path;
};

int cmd_space(const SpaceArgs& args, const Common& common) {
    Graph g = read_graph_file(args.graph);
    auto labels = load_labels(args.labels, g);
    SolutionSpace space = build_space(g, args.k, common.limits());
    auto diameters = component_diameter(space);
    if (!args.export_path.empty()) write_file(args.export_path, export_space(space));

    // named sets that are nodes of the space, with their component
    std::vector<std::pair<std::string, std::optional<std::size_t>>> placed;
    if (labels) {
        for (const auto& [name, set] : labels->sets) {
            auto idx = space.index_of(set);
            std::optional<std::size_t> comp;
            if (idx) {
                for (std::size_t c = 0; c < diameters.size(); ++c) {
                    if (std::binary_search(diameters[c].nodes.begin(), diameters[c].nodes.end(), *idx)) comp = c + 1;
                }
            }
            placed.emplace_back(name, comp);
        }
    }

    if (common.structured()) {
        json j;
        j["k"] = args.k;
        j["nodes"] = space.nodes().size();
        j["edges"] = space.edge_count();
        j["connected"] = diameters.size() == 1;
        j["components"] = json::array();
        for (std::size_t c = 0; c < diameters.size(); ++c) {
            j["components"].push_back({{"id", c + 1},
                                       {"size", diameters[c].nodes.size()},
                                       {"diameter", diameters[c].diameter},
                                       {"first", set_json(space.nodes()[diameters[c].nodes.front()])}});
        }
        if (labels) {
            j["named_sets"] = json::object();
            for (const auto& [name, comp] : placed) j["named_sets"][name] = comp ? json(*comp) : json(nullptr);
        }
        emit(common, dump(j));
    } else {
        std::ostringstream out;
        out << "k " << args.k << "\nnodes " << space.nodes().size() << "\nedges " << space.edge_count()
            << "\ncomponents " << diameters.size() << '\n';
        for (std::size_t c = 0; c < diameters.size(); ++c) {
            out << "component " << c + 1 << " size " << diameters[c].nodes.size() << " diameter "
                << diameters[c].diameter << " first " << to_string(space.nodes()[diameters[c].nodes.front()]) << '\n';
        }
        for (const auto& [name, comp] : placed) {
            out << "set " << name << ' ' << (comp ? "component " + std::to_string(*comp) : std::string("not-a-node"))
                << '\n';
        }
        emit(common, out.str());
    }
    return kOk;
}

// ---- path ----

struct PathArgs {
    std::string graph;
    std::optional<int> k;
    std::string from;
    std::string to;
    std::string method = "bfs";
    std::string labels;
};

int cmd_path(const PathArgs& args, const Common& common) {
    Graph g = read_graph_file(args.graph);
    auto labels = load_labels(args.labels, g);
    VertexSet a = resolve_set(args.from, g, labels);
    VertexSet b = resolve_set(args.to, g, labels);

    std::optional<ReconfigSequence> seq;
    SearchStatus status = SearchStatus::found;
    std::size_t visited = 0;
    int k = 0;
    if (args.method == "bfs") {
        if (!args.k) throw PreconditionError("--k is required for --method bfs");
        k = *args.k;
        PathResult r = shortest_path(g, k, a, b, common.limits());
        status = r.status;
        visited = r.visited;
        seq = r.path;
    } else {
        // k = n - m needs m + 1 independent edges; without --k use a maximum matching
        std::size_t count = args.k ? static_cast<std::size_t>(g.order() - *args.k + 1) : maximum_matching_size(g);
        if (count < 1) throw PreconditionError("constructive method needs k <= n");
        IndependentEdgeSet ind = find_independent_edges(g, count);
        k = g.order() - ind.m();
        seq = reconfigure_pair(g, ind, a, b);
    }

    std::string verdict = to_string(status);
    if (common.structured()) {
        json j;
        j["method"] = args.method;
        j["k"] = k;
        j["verdict"] = verdict;
        if (args.method == "bfs") j["visited"] = visited;
        if (seq) {
            j["length"] = seq->length();
            j["start"] = set_json(seq->start);
            j["moves"] = json::array();
            for (const auto& m : seq->moves) {
                j["moves"].push_back((m.kind == MoveKind::add ? "+" : "-") + std::to_string(m.vertex + 1));
            }
        }
        emit(common, dump(j));
    } else if (seq) {
        emit(common, serialize_sequence(*seq));
        if (!common.output.empty()) std::cout << "verdict found length " << seq->length() << '\n';
    } else {
        std::cout << "verdict " << verdict << '\n';
    }
    if (status == SearchStatus::disconnected) return kNegative;
    if (status == SearchStatus::resource_cap) return kCap;
    return kOk;
}

// ---- validate ----

int cmd_validate(const std::string& graph_path, const std::string& seq_path, int k, const Common& common) {
    Graph g = read_graph_file(graph_path);
    ReconfigSequence seq = parse_sequence(read_file(seq_path), static_cast<std::size_t>(g.order()), k);
    auto violation = validate_sequence(g, k, seq);
    if (common.structured()) {
        json j;
        j["valid"] = !violation;
        j["length"] = seq.length();
        j["end"] = set_json(seq.end());
        if (violation) {
            j["step"] = violation->step;
            j["message"] = violation->message;
        }
        emit(common, dump(j));
    } else if (violation) {
        emit(common, "invalid at step " + std::to_string(violation->step) + ": " + violation->message + "\n");
    } else {
        emit(common, "valid length " + std::to_string(seq.length()) + " end " + to_string(seq.end()) + "\n");
    }
    return violation ? kNegative : kOk;
}

// ---- verify ----

struct VerifyArgs {
    std::vector<std::string> claims;
    std::string level = "quick";
    std::string report;
    bool timings = false;
};

int cmd_verify(const VerifyArgs& args, const Common& common) {
    VerifyOptions options;
    options.limits = common.limits();
    options.seed = common.seed;
    Level level = args.level == "full" ? Level::full : Level::quick;
    auto reports = run_all(level, options, common.threads, args.claims);
    if (common.structured()) {
        emit(common, format_json(reports, args.timings));
    } else {
        emit(common, format_table(reports, args.timings));
    }
    if (!args.report.empty()) write_file(args.report, format_json(reports, args.timings));
    return overall_status(reports);
}

// ---- bench ----

int cmd_bench(int max_n, const Common& common) {
    // timings are the point here, so this output is not byte-deterministic
    json rows = json::array();
    std::ostringstream out;
    out << "n  k   distance  bound  visited  seconds\n";
    int status = kOk;
    for (int n = 1; n <= max_n; ++n) {
        LadderGraph g(n);
        const int k = 6 * n + 1;
        auto start = std::chrono::steady_clock::now();
        PathResult r = shortest_path(g.graph(), k, g.uniform(1), g.uniform(7), common.limits());
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        long long bound = 12LL * ((1LL << (n + 1)) - n - 2);
        long long distance = r.path ? static_cast<long long>(r.path->length()) : -1;
        rows.push_back({{"n", n}, {"k", k}, {"status", to_string(r.status)}, {"distance", distance},
                        {"bound", bound}, {"visited", r.visited}, {"seconds", seconds}});
        out << n << "  " << k << "  " << (r.path ? std::to_string(distance) : to_string(r.status)) << "  " << bound
            << "  " << r.visited << "  " << seconds << '\n';
        if (r.status == SearchStatus::resource_cap) {
            status = kCap;
            break;
        }
    }
    emit(common, common.structured() ? dump(rows) : out.str());
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dominating-set reconfiguration: k-dominating graphs, staged reconfiguration, extremal families"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "text or structured (JSON)")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--output,-o", common.output, "write the main output here instead of stdout");
        sub->add_option("--limit-nodes", common.limit_nodes, "state cap for searches and space construction")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", common.seed, "seed for randomized checks");
        sub->add_option("--threads", common.threads, "worker cap (results do not depend on it)")
            ->check(CLI::PositiveNumber);
    };

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a family graph and its label file");
    gen_cmd->add_option("family", gen.family, "clique-family | path | ladder-graph")
        ->required()
        ->check(CLI::IsMember({"clique-family", "path", "ladder-graph"}));
    gen_cmd->add_option("-d", gen.d, "clique family: inner cliques");
    gen_cmd->add_option("-b", gen.b, "clique family: clique size");
    gen_cmd->add_option("-n", gen.n, "path length or ladder count");
    gen_cmd->add_option("--labels", gen.labels_out, "label file path (default <output>.labels)");
    add_common(gen_cmd);

    std::string analyze_graph;
    auto* analyze_cmd = app.add_subcommand("analyze", "gamma, Gamma, witnesses and matching size");
    analyze_cmd->add_option("graph", analyze_graph)->required();
    add_common(analyze_cmd);

    SpaceArgs space;
    auto* space_cmd = app.add_subcommand("space", "build D_k(G) and report components and diameters");
    space_cmd->add_option("graph", space.graph)->required();
    space_cmd->add_option("--k", space.k, "cardinality cap")->required()->check(CLI::NonNegativeNumber);
    space_cmd->add_option("--labels", space.labels, "label file; named sets are placed in components");
    space_cmd->add_option("--export", space.export_path, "write node/arc lists here");
    add_common(space_cmd);

    PathArgs path;
    auto* path_cmd = app.add_subcommand("path", "reconfiguration sequence between two dominating sets");
    path_cmd->add_option("graph", path.graph)->required();
    path_cmd->add_option("--k", path.k, "cardinality cap (constructive: n - m)");
    path_cmd->add_option("--from", path.from, "start set, inline {..} or label name")->required();
    path_cmd->add_option("--to", path.to, "target set, inline {..} or label name")->required();
    path_cmd->add_option("--method", path.method, "bfs (shortest) or constructive (staged)")
        ->check(CLI::IsMember({"bfs", "constructive"}));
    path_cmd->add_option("--labels", path.labels, "label file for named sets");
    add_common(path_cmd);

    std::string validate_graph;
    std::string validate_seq;
    int validate_k = 0;
    auto* validate_cmd = app.add_subcommand("validate", "replay a sequence file under a cap");
    validate_cmd->add_option("graph", validate_graph)->required();
    validate_cmd->add_option("sequence", validate_seq)->required();
    validate_cmd->add_option("--k", validate_k, "cardinality cap")->required();
    add_common(validate_cmd);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the claim checks");
    verify_cmd->add_option("--claims", verify.claims, "restrict to these claim ids")->delimiter(',');
    verify_cmd->add_option("--level", verify.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--report", verify.report, "also write the JSON report here");
    verify_cmd->add_flag("--timings", verify.timings, "include runtimes (output no longer byte-stable)");
    add_common(verify_cmd);

    int bench_n = 4;
    auto* bench_cmd = app.add_subcommand("bench", "time the all-S_1 to all-S_7 search on G_1..G_n");
    bench_cmd->add_option("--max-n", bench_n, "largest ladder count")->check(CLI::Range(1, 12));
    add_common(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, common);
        if (*analyze_cmd) return cmd_analyze(analyze_graph, common);
        if (*space_cmd) return cmd_space(space, common);
        if (*path_cmd) return cmd_path(path, common);
        if (*validate_cmd) return cmd_validate(validate_graph, validate_seq, validate_k, common);
        if (*verify_cmd) {
            for (const auto& id : verify.claims) {
                if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
                    throw PreconditionError("unknown claim '" + id + "'");
                }
            }
            return cmd_verify(verify, common);
        }
        if (*bench_cmd) return cmd_bench(bench_n, common);
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << " (partial count " << e.partial_count() << ")\n";
        std::cout << "verdict resource_cap\n";
        return kCap;
    } catch (const NotFoundError& e) {
        std::cerr << e.what() << '\n';
        std::cout << "verdict not_found\n";
        return kNegative;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        // ParseError, GraphError, PreconditionError and I/O failures
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
