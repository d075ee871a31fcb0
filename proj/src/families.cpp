#include "domreconf/families.hpp"

#include <charconv>
#include <sstream>

#include "domreconf/errors.hpp"

namespace domreconf {

Vertex FamilyLabels::vertex(const std::string& name) const {
    auto it = vertices.find(name);
    if (it == vertices.end()) throw PreconditionError("unknown vertex label '" + name + "'");
    return it->second;
}

const VertexSet& FamilyLabels::set(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) throw PreconditionError("unknown set label '" + name + "'");
    return it->second;
}

std::string serialize_labels(const FamilyLabels& labels) {
    std::ostringstream out;
    for (const auto& [name, v] : labels.vertices) out << "label " << name << ' ' << v + 1 << '\n';
    for (const auto& [name, s] : labels.sets) out << "set " << name << ' ' << to_string(s) << '\n';
    return out.str();
}

FamilyLabels parse_labels(std::string_view text, std::size_t universe) {
    FamilyLabels labels;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.empty() || line.starts_with("c ")) continue;
        auto first = line.find(' ');
        auto second = first == std::string_view::npos ? first : line.find(' ', first + 1);
        if (second == std::string_view::npos) throw ParseError(line_no, "label line needs a kind, a name and a value");
        std::string_view kind = line.substr(0, first);
        std::string name(line.substr(first + 1, second - first - 1));
        std::string_view value = line.substr(second + 1);
        if (kind == "label") {
            long long id = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), id);
            if (ec != std::errc{} || ptr != value.data() + value.size() || id < 1 ||
                static_cast<std::size_t>(id) > universe) {
                throw ParseError(line_no, "bad vertex id '" + std::string(value) + "'");
            }
            labels.vertices[name] = static_cast<Vertex>(id - 1);
        } else if (kind == "set") {
            try {
                labels.sets[name] = parse_vertex_set(value, universe);
            } catch (const ParseError& e) {
                throw ParseError(line_no, e.what());
            }
        } else {
            throw ParseError(line_no, "unknown label line kind '" + std::string(kind) + "'");
        }
    }
    return labels;
}

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::clique_family:
            if (b < 3 || d < 2) throw PreconditionError("clique family needs b >= 3 and d >= 2");
            break;
        case FamilyKind::path:
            if (n < 1) throw PreconditionError("path needs n >= 1");
            break;
        case FamilyKind::ladder_graph:
            if (n < 1) throw PreconditionError("ladder graph needs n >= 1");
            break;
    }
}

std::string FamilySpec::describe() const {
    switch (kind) {
        case FamilyKind::clique_family: return "clique-family d=" + std::to_string(d) + " b=" + std::to_string(b);
        case FamilyKind::path: return "path n=" + std::to_string(n);
        case FamilyKind::ladder_graph: return "ladder-graph n=" + std::to_string(n);
    }
    return "?";
}

GeneratedFamily generate(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::clique_family: {
            CliqueFamily fam(spec.d, spec.b);
            return {fam.graph(), fam.labels()};
        }
        case FamilyKind::path: return {gen_path(spec.n), {}};
        case FamilyKind::ladder_graph: {
            LadderGraph fam(spec.n);
            return {fam.graph(), fam.labels()};
        }
    }
    throw PreconditionError("unknown family");
}

// ---------------------------------------------------------------- G_(d,b)

CliqueFamily::CliqueFamily(int d, int b) : d_(d), b_(b) {
    FamilySpec{FamilyKind::clique_family, d, b, 0}.validate();
    graph_ = Graph((d + 1) * b);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j < b; ++j) {
            for (int l = j + 1; l < b; ++l) graph_.add_edge(i * b + j, i * b + l);
        }
    }
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= b; ++j) graph_.add_edge(outer(j), inner(i, j));
    }
}

Vertex CliqueFamily::outer(int j) const {
    if (j < 1 || j > b_) throw PreconditionError("outer index out of range");
    return j - 1;
}

Vertex CliqueFamily::inner(int i, int j) const {
    if (i < 1 || i > d_ || j < 1 || j > b_) throw PreconditionError("inner index out of range");
    return i * b_ + (j - 1);
}

VertexSet CliqueFamily::outer_clique() const {
    VertexSet s = graph_.empty_set();
    for (int j = 1; j <= b_; ++j) s.insert(outer(j));
    return s;
}

VertexSet CliqueFamily::separated_set() const {
    VertexSet s = graph_.empty_set();
    for (int i = 1; i <= d_; ++i) s.insert(inner(i, (i - 1) % b_ + 1));
    for (int l = d_ + 1; l <= b_; ++l) s.insert(inner(d_, l));
    return s;
}

VertexSet CliqueFamily::large_minimal_set() const {
    VertexSet s = graph_.empty_set();
    for (int j = 2; j <= b_; ++j) s.insert(inner(1, j));
    for (int i = 2; i <= d_; ++i) s.insert(inner(i, 1));
    return s;
}

std::vector<VertexSet> CliqueFamily::b_partition() const {
    std::vector<VertexSet> parts(static_cast<std::size_t>(b_), graph_.empty_set());
    for (int j = 1; j <= b_; ++j) {
        auto& part = parts[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i <= d_; ++i) part.insert(inner(i, j));
        for (int i = 1; i <= b_; ++i) {
            if (i % b_ == (j + 1) % b_) part.insert(outer(i));
        }
    }
    return parts;
}

FamilyLabels CliqueFamily::labels() const {
    FamilyLabels labels;
    for (int j = 1; j <= b_; ++j) labels.vertices["o_" + std::to_string(j)] = outer(j);
    for (int i = 1; i <= d_; ++i) {
        for (int j = 1; j <= b_; ++j) {
            labels.vertices["v_" + std::to_string(i) + "_" + std::to_string(j)] = inner(i, j);
        }
    }
    labels.sets["A"] = outer_clique();
    labels.sets["B"] = separated_set();
    labels.sets["M"] = large_minimal_set();
    auto parts = b_partition();
    for (std::size_t j = 0; j < parts.size(); ++j) labels.sets["P" + std::to_string(j + 1)] = parts[j];
    return labels;
}

Graph gen_path(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// ---------------------------------------------------------------- G_n

const std::array<std::array<int, 3>, 4>& rung_choices() {
    static const std::array<std::array<int, 3>, 4> choices{{{1, 3, 5}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}}};
    return choices;
}

const std::array<std::array<int, 2>, 7>& state_choices() {
    static const std::array<std::array<int, 2>, 7> pairs{{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}}};
    return pairs;
}

LadderGraph::LadderGraph(int ladders) : ladders_(ladders) {
    FamilySpec{FamilyKind::ladder_graph, 0, 0, ladders}.validate();
    graph_ = Graph(ladders * kLadderSize + (ladders - 1) * kGluingSize);
    gadgets_.resize(static_cast<std::size_t>(ladders));
    for (int j = 1; j <= ladders; ++j) {
        const Vertex base = (j - 1) * kLadderSize;
        auto& gadgets = gadgets_[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i <= 5; ++i) {
            gadgets[static_cast<std::size_t>(i - 1)].e1 = left(j, i);
            gadgets[static_cast<std::size_t>(i - 1)].e2 = left(j, i + 1);
            gadgets[static_cast<std::size_t>(i + 4)].e1 = right(j, i);
            gadgets[static_cast<std::size_t>(i + 4)].e2 = right(j, i + 1);
            gadgets[static_cast<std::size_t>(i + 9)].e1 = left(j, i + 1);
            gadgets[static_cast<std::size_t>(i + 9)].e2 = right(j, i);
        }
        for (int g = 0; g < kGadgets; ++g) {
            Gadget& gad = gadgets[static_cast<std::size_t>(g)];
            graph_.add_edge(gad.e1, gad.e2);
            for (int t = 0; t < 3; ++t) {
                Vertex x = base + kRungVertices + 3 * g + t;
                gad.internals[static_cast<std::size_t>(t)] = x;
                graph_.add_edge(gad.e1, x);
                graph_.add_edge(gad.e2, x);
            }
        }
    }
    for (int j = 1; j < ladders; ++j) {
        // bottom cluster
        graph_.add_edge(left(j, 1), gluing(j, 1));
        graph_.add_edge(left(j, 1), gluing(j, 2));
        graph_.add_edge(right(j, 2), gluing(j, 1));
        graph_.add_edge(right(j, 2), gluing(j, 2));
        graph_.add_edge(left(j + 1, 6), gluing(j, 1));
        graph_.add_edge(right(j + 1, 6), gluing(j, 2));
        // middle cluster
        graph_.add_edge(left(j, 3), gluing(j, 3));
        graph_.add_edge(left(j, 3), gluing(j, 4));
        graph_.add_edge(right(j, 4), gluing(j, 3));
        graph_.add_edge(right(j, 4), gluing(j, 4));
        graph_.add_edge(left(j + 1, 1), gluing(j, 3));
        graph_.add_edge(right(j + 1, 1), gluing(j, 4));
        // top cluster
        graph_.add_edge(left(j, 5), gluing(j, 5));
        graph_.add_edge(left(j, 5), gluing(j, 6));
        graph_.add_edge(right(j, 6), gluing(j, 5));
        graph_.add_edge(right(j, 6), gluing(j, 6));
        graph_.add_edge(left(j + 1, 6), gluing(j, 5));
        graph_.add_edge(right(j + 1, 6), gluing(j, 6));
    }
}

Vertex LadderGraph::left(int j, int i) const {
    if (j < 1 || j > ladders_ || i < 1 || i > 6) throw PreconditionError("ladder vertex index out of range");
    return (j - 1) * kLadderSize + (i - 1);
}

Vertex LadderGraph::right(int j, int i) const {
    if (j < 1 || j > ladders_ || i < 1 || i > 6) throw PreconditionError("ladder vertex index out of range");
    return (j - 1) * kLadderSize + 6 + (i - 1);
}

Vertex LadderGraph::gluing(int j, int t) const {
    if (j < 1 || j >= ladders_ || t < 1 || t > kGluingSize) throw PreconditionError("gluing index out of range");
    return ladders_ * kLadderSize + (j - 1) * kGluingSize + (t - 1);
}

const LadderGraph::Gadget& LadderGraph::gadget(int j, int g) const {
    if (j < 1 || j > ladders_ || g < 0 || g >= kGadgets) throw PreconditionError("gadget index out of range");
    return gadgets_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(g)];
}

VertexSet LadderGraph::ladder_vertices(int j) const {
    VertexSet s = graph_.empty_set();
    const Vertex base = (j - 1) * kLadderSize;
    for (Vertex v = base; v < base + kLadderSize; ++v) s.insert(v);
    return s;
}

VertexSet LadderGraph::gluing_vertices(int j) const {
    VertexSet s = graph_.empty_set();
    for (int t = 1; t <= kGluingSize; ++t) s.insert(gluing(j, t));
    return s;
}

std::vector<VertexSet> LadderGraph::vertical_pair_gadgets() const {
    std::vector<VertexSet> out;
    for (int j = 1; j <= ladders_; ++j) {
        // left pairs {l1,l2},{l3,l4},{l5,l6} are gadgets 0,2,4; right ones 5,7,9
        for (int g : {0, 2, 4, 5, 7, 9}) {
            const Gadget& gad = gadget(j, g);
            VertexSet s = graph_.empty_set();
            s.insert(gad.e1);
            s.insert(gad.e2);
            for (Vertex x : gad.internals) s.insert(x);
            out.push_back(std::move(s));
        }
    }
    return out;
}

VertexSet LadderGraph::state(int j, int i) const {
    if (i < 1 || i > kStates) throw PreconditionError("ladder state index must be 1..7");
    const auto& [left_choice, right_choice] = state_choices()[static_cast<std::size_t>(i - 1)];
    VertexSet s = graph_.empty_set();
    for (int a : rung_choices()[static_cast<std::size_t>(left_choice - 1)]) s.insert(left(j, a));
    for (int a : rung_choices()[static_cast<std::size_t>(right_choice - 1)]) s.insert(right(j, a));
    return s;
}

VertexSet LadderGraph::compose(std::span<const int> states) const {
    if (static_cast<int>(states.size()) != ladders_) throw PreconditionError("need one state per ladder");
    VertexSet s = graph_.empty_set();
    for (int j = 1; j <= ladders_; ++j) s |= state(j, states[static_cast<std::size_t>(j - 1)]);
    return s;
}

VertexSet LadderGraph::uniform(int i) const {
    std::vector<int> states(static_cast<std::size_t>(ladders_), i);
    return compose(states);
}

FamilyLabels LadderGraph::labels() const {
    FamilyLabels labels;
    for (int j = 1; j <= ladders_; ++j) {
        const std::string js = std::to_string(j);
        for (int i = 1; i <= 6; ++i) {
            labels.vertices["l_" + js + "_" + std::to_string(i)] = left(j, i);
            labels.vertices["r_" + js + "_" + std::to_string(i)] = right(j, i);
        }
        for (int g = 0; g < kGadgets; ++g) {
            for (int t = 0; t < 3; ++t) {
                labels.vertices["i_" + js + "_" + std::to_string(g + 1) + "_" + std::to_string(t + 1)] =
                    gadget(j, g).internals[static_cast<std::size_t>(t)];
            }
        }
        for (int i = 1; i <= kStates; ++i) labels.sets["S" + std::to_string(i) + "@L" + js] = state(j, i);
    }
    for (int j = 1; j < ladders_; ++j) {
        for (int t = 1; t <= kGluingSize; ++t) {
            labels.vertices["g_" + std::to_string(j) + "_" + std::to_string(t)] = gluing(j, t);
        }
    }
    for (int i = 1; i <= kStates; ++i) labels.sets["S" + std::to_string(i) + "*"] = uniform(i);
    int pair = 0;
    for (int j = 1; j <= ladders_; ++j) {
        for (int g : {0, 2, 4, 5, 7, 9}) {
            labels.sets["D_" + std::to_string(++pair)] = graph_.make_set({gadget(j, g).e1, gadget(j, g).e2});
        }
    }
    return labels;
}

std::vector<LadderState> decode_ladder_states(const LadderGraph& ladder, const VertexSet& s) {
    std::vector<LadderState> out;
    out.reserve(static_cast<std::size_t>(ladder.ladders()));
    for (int j = 1; j <= ladder.ladders(); ++j) {
        LadderState st;
        st.raw = s & ladder.ladder_vertices(j);
        bool touches_gluing = (j > 1 && s.intersects(ladder.gluing_vertices(j - 1))) ||
                              (j < ladder.ladders() && s.intersects(ladder.gluing_vertices(j)));
        if (!touches_gluing) {
            for (int i = 1; i <= LadderGraph::kStates; ++i) {
                if (st.raw == ladder.state(j, i)) {
                    st.state = i;
                    break;
                }
            }
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<int> count_switches(std::span<const std::vector<LadderState>> trace) {
    if (trace.empty()) return {};
    const std::size_t ladders = trace.front().size();
    std::vector<int> switches(ladders, 0);
    std::vector<int> last_extreme(ladders, 0);
    for (const auto& row : trace) {
        if (row.size() != ladders) throw PreconditionError("trace rows disagree on the number of ladders");
        for (std::size_t j = 0; j < ladders; ++j) {
            int st = row[j].state;
            if (st != 1 && st != LadderGraph::kStates) continue;
            if (last_extreme[j] != 0 && last_extreme[j] != st) ++switches[j];
            last_extreme[j] = st;
        }
    }
    return switches;
}

} // namespace domreconf
