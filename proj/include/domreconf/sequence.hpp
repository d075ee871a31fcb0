#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domreconf/graph.hpp"
#include "domreconf/vertex_set.hpp"

namespace domreconf {

enum class MoveKind { add, remove };

struct Move {
    MoveKind kind = MoveKind::add;
    Vertex vertex = 0;

    static Move add(Vertex v) { return {MoveKind::add, v}; }
    static Move remove(Vertex v) { return {MoveKind::remove, v}; }

    friend bool operator==(const Move&, const Move&) = default;
};

// A walk in D_k(G): a start set followed by single-vertex additions/removals.
struct ReconfigSequence {
    VertexSet start;
    std::vector<Move> moves;
    int k = 0;

    std::size_t length() const noexcept { return moves.size(); }

    // Set reached after all moves. Does not check feasibility.
    VertexSet end() const;

    // start, then the set after each move (length()+1 entries).
    std::vector<VertexSet> states() const;
};

// Same walk traversed backwards, starting from seq.end().
ReconfigSequence reversed(const ReconfigSequence& seq);

// Joins two walks; b must start where a ends.
ReconfigSequence concatenate(const ReconfigSequence& a, const ReconfigSequence& b);

enum class ViolationKind { not_dominating, exceeds_cap, remove_absent, add_present, bad_vertex };

struct Violation {
    std::size_t step = 0; // 0 = start set, i = after move i
    ViolationKind kind = ViolationKind::not_dominating;
    std::string message;
};

// Replays seq under cap k. Returns the first violation, or nullopt when every
// set along the walk is a dominating set of size at most k.
std::optional<Violation> validate_sequence(const Graph& g, int k, const ReconfigSequence& seq);

// Text form: "start {..}" then one "+ v" / "- v" line per move (1-based).
std::string serialize_sequence(const ReconfigSequence& seq);
ReconfigSequence parse_sequence(std::string_view text, std::size_t universe, int k = 0);

} // namespace domreconf
