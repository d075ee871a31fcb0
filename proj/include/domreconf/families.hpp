#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

// Named vertices and named vertex sets of a generated graph.
struct FamilyLabels {
    std::map<std::string, Vertex> vertices;
    std::map<std::string, VertexSet> sets;

    Vertex vertex(const std::string& name) const;
    const VertexSet& set(const std::string& name) const;
};

// "label <name> <id>" and "set <name> {..}" lines, 1-based ids.
std::string serialize_labels(const FamilyLabels& labels);
FamilyLabels parse_labels(std::string_view text, std::size_t universe);

enum class FamilyKind { clique_family, path, ladder_graph };

struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int d = 0; // clique family: number of inner cliques
    int b = 0; // clique family: clique size
    int n = 0; // path length, or number of ladders

    // Throws PreconditionError unless b >= 3, d >= 2 / n >= 1.
    void validate() const;
    std::string describe() const;
};

struct GeneratedFamily {
    Graph graph;
    FamilyLabels labels;
};

GeneratedFamily generate(const FamilySpec& spec);

// G_(d,b): an outer clique C_0 = {o_1..o_b} and inner cliques C_1..C_d of size
// b, with o_j adjacent to v_(i,j) for every inner clique i.
class CliqueFamily {
public:
    CliqueFamily(int d, int b);

    int d() const noexcept { return d_; }
    int b() const noexcept { return b_; }
    const Graph& graph() const noexcept { return graph_; }
    FamilyLabels labels() const;

    Vertex outer(int j) const;        // o_j, 1 <= j <= b
    Vertex inner(int i, int j) const; // v_(i,j), 1 <= i <= d, 1 <= j <= b

    VertexSet outer_clique() const; // A
    // B: v_(i,l) with i = l (mod b); when d < b the outer vertices o_(d+1..b)
    // are left undominated by that rule, so v_(d,l) is added for each of them.
    VertexSet separated_set() const;
    // {v_(1,j) : 2 <= j <= b} + {v_(i,1) : 2 <= i <= d}, minimal of size d + b - 2
    VertexSet large_minimal_set() const;
    // Colour class j: {v_(i,j) : all i} + {o_i : i = j + 1 (mod b)}
    std::vector<VertexSet> b_partition() const;

private:
    int d_;
    int b_;
    Graph graph_;
};

Graph gen_path(int n);

// One entry per ladder: 1..7 for a canonical state, 0 for anything else.
struct LadderState {
    int state = 0;
    VertexSet raw; // restriction of the decoded set to the ladder

    bool standard() const noexcept { return state != 0; }
};

// G_n: n ladders, each with rung vertices l_1..l_6, r_1..r_6 and fifteen
// linkage gadgets, glued consecutively by six gluing vertices.
//
// Indexing: ladder j (1-based) occupies [57(j-1), 57j): l_1..l_6, r_1..r_6,
// then three internals per gadget in gadget order (left vertical pairs,
// right vertical pairs, cross pairs, each by ascending i). Gluing vertices
// g_(j,1..6) follow all ladders, at 57n + 6(j-1).
class LadderGraph {
public:
    static constexpr int kRungVertices = 12;
    static constexpr int kGadgets = 15;
    static constexpr int kLadderSize = kRungVertices + 3 * kGadgets; // 57
    static constexpr int kGluingSize = 6;
    static constexpr int kStates = 7;

    struct Gadget {
        Vertex e1 = 0;
        Vertex e2 = 0;
        std::array<Vertex, 3> internals{};
    };

    explicit LadderGraph(int ladders);

    int ladders() const noexcept { return ladders_; }
    const Graph& graph() const noexcept { return graph_; }
    Graph& mutable_graph() noexcept { return graph_; }
    FamilyLabels labels() const;

    Vertex left(int j, int i) const;   // l_(j,i)
    Vertex right(int j, int i) const;  // r_(j,i)
    Vertex gluing(int j, int t) const; // g_(j,t), 1 <= j < n
    const Gadget& gadget(int j, int g) const; // g in 0..14

    VertexSet ladder_vertices(int j) const;
    VertexSet gluing_vertices(int j) const;

    // Vertex sets of the 6n linkage gadgets on {l_(2i-1), l_(2i)} and {r_(2i-1), r_(2i)}.
    std::vector<VertexSet> vertical_pair_gadgets() const;

    // Canonical state S_i restricted to ladder j.
    VertexSet state(int j, int i) const;
    // Union of state(j, states[j-1]) over all ladders.
    VertexSet compose(std::span<const int> states) const;
    // Every ladder in state S_i.
    VertexSet uniform(int i) const;

private:
    int ladders_;
    Graph graph_;
    std::vector<std::array<Gadget, kGadgets>> gadgets_;
};

// Index sets C_1..C_4 of the rung choices that leave no vertical gap.
const std::array<std::array<int, 3>, 4>& rung_choices();
// (left, right) choice indices (1-based) of S_1..S_7.
const std::array<std::array<int, 2>, 7>& state_choices();

std::vector<LadderState> decode_ladder_states(const LadderGraph& ladder, const VertexSet& s);

// Per-ladder switch counts over a trace of decoded states. A switch is
// counted whenever a ladder reaches S_7 having last been at an extreme in
// S_1, or the reverse. Nonstandard entries neither count nor reset.
std::vector<int> count_switches(std::span<const std::vector<LadderState>> trace);

} // namespace domreconf
