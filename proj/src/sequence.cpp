#include "domreconf/sequence.hpp"

#include <charconv>
#include <sstream>

#include "domreconf/domination.hpp"
#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

void apply(VertexSet& s, const Move& mv) {
    if (mv.kind == MoveKind::add) {
        s.insert(mv.vertex);
    } else {
        s.erase(mv.vertex);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

VertexSet ReconfigSequence::end() const {
    VertexSet s = start;
    for (const Move& mv : moves) apply(s, mv);
    return s;
}

std::vector<VertexSet> ReconfigSequence::states() const {
    std::vector<VertexSet> out;
    out.reserve(moves.size() + 1);
    out.push_back(start);
    for (const Move& mv : moves) {
        VertexSet next = out.back();
        apply(next, mv);
        out.push_back(std::move(next));
    }
    return out;
}

ReconfigSequence reversed(const ReconfigSequence& seq) {
    ReconfigSequence out{seq.end(), {}, seq.k};
    out.moves.reserve(seq.moves.size());
    for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) {
        out.moves.push_back(it->kind == MoveKind::add ? Move::remove(it->vertex) : Move::add(it->vertex));
    }
    return out;
}

ReconfigSequence concatenate(const ReconfigSequence& a, const ReconfigSequence& b) {
    if (a.end() != b.start) throw PreconditionError("cannot join walks: second does not start where first ends");
    ReconfigSequence out = a;
    out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
    return out;
}

std::optional<Violation> validate_sequence(const Graph& g, int k, const ReconfigSequence& seq) {
    if (!g.valid_set(seq.start)) {
        return Violation{0, ViolationKind::bad_vertex, "start set is over the wrong universe"};
    }
    auto check_set = [&](const VertexSet& s, std::size_t step) -> std::optional<Violation> {
        if (static_cast<int>(s.size()) > k) {
            return Violation{step, ViolationKind::exceeds_cap,
                             "set " + to_string(s) + " has size " + std::to_string(s.size()) + " > k = " +
                                 std::to_string(k)};
        }
        if (!is_dominating(g, s)) {
            return Violation{step, ViolationKind::not_dominating, "set " + to_string(s) + " is not dominating"};
        }
        return std::nullopt;
    };
    if (auto v = check_set(seq.start, 0)) return v;
    VertexSet current = seq.start;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        const Move& mv = seq.moves[i];
        std::size_t step = i + 1;
        if (mv.vertex < 0 || mv.vertex >= g.order()) {
            return Violation{step, ViolationKind::bad_vertex, "vertex " + std::to_string(mv.vertex + 1) + " out of range"};
        }
        if (mv.kind == MoveKind::add && current.contains(mv.vertex)) {
            return Violation{step, ViolationKind::add_present,
                             "adding vertex " + std::to_string(mv.vertex + 1) + " already in the set"};
        }
        if (mv.kind == MoveKind::remove && !current.contains(mv.vertex)) {
            return Violation{step, ViolationKind::remove_absent,
                             "removing vertex " + std::to_string(mv.vertex + 1) + " not in the set"};
        }
        apply(current, mv);
        if (auto v = check_set(current, step)) return v;
    }
    return std::nullopt;
}

std::string serialize_sequence(const ReconfigSequence& seq) {
    std::ostringstream out;
    out << "start " << to_string(seq.start) << '\n';
    for (const Move& mv : seq.moves) out << (mv.kind == MoveKind::add ? "+ " : "- ") << mv.vertex + 1 << '\n';
    return out.str();
}

ReconfigSequence parse_sequence(std::string_view text, std::size_t universe, int k) {
    ReconfigSequence seq;
    seq.k = k;
    bool have_start = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == 'c') continue;
        if (line.starts_with("start")) {
            if (have_start) throw ParseError(line_no, "second start line");
            try {
                seq.start = parse_vertex_set(line.substr(5), universe);
            } catch (const ParseError& e) {
                throw ParseError(line_no, e.what());
            }
            have_start = true;
            continue;
        }
        if (!have_start) throw ParseError(line_no, "move before start line");
        if (line.size() < 3 || (line[0] != '+' && line[0] != '-') || line[1] != ' ') {
            throw ParseError(line_no, "move must be '+ <v>' or '- <v>'");
        }
        std::string_view num = trim(line.substr(2));
        long long id = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), id);
        if (ec != std::errc{} || ptr != num.data() + num.size() || id < 1 || static_cast<std::size_t>(id) > universe) {
            throw ParseError(line_no, "bad vertex id '" + std::string(num) + "'");
        }
        auto v = static_cast<Vertex>(id - 1);
        seq.moves.push_back(line[0] == '+' ? Move::add(v) : Move::remove(v));
    }
    if (!have_start) throw ParseError(line_no, "missing start line");
    return seq;
}

} // namespace domreconf
