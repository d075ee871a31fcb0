#include "domreconf/vertex_set.hpp"

#include <algorithm>
#include <charconv>

#include "domreconf/errors.hpp"

namespace domreconf {

namespace {

std::size_t word_count(std::size_t universe) {
    return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.clear_tail();
    return s;
}

std::size_t VertexSet::size() const noexcept {
    std::size_t count = 0;
    for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
        throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
    }
    auto i = static_cast<std::size_t>(v);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) return;
    auto i = static_cast<std::size_t>(v);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

VertexSet VertexSet::with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
    }
    return -1;
}

Vertex VertexSet::next_after(Vertex v) const noexcept {
    auto start = static_cast<std::size_t>(v) + 1;
    if (v < 0) start = 0;
    if (start >= universe_) return -1;
    std::size_t w = start / kWordBits;
    Word bits = words_[w] & (~Word{0} << (start % kWordBits));
    while (true) {
        if (bits != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        if (++w == words_.size()) return -1;
        bits = words_[w];
    }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
        throw PreconditionError("vertex sets over different universes (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
    }
}

void VertexSet::clear_tail() noexcept {
    if (universe_ % kWordBits != 0 && !words_.empty()) {
        words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s = *this;
    for (Word& w : s.words_) w = ~w;
    s.clear_tail();
    return s;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::size_t VertexSet::symmetric_difference_size(const VertexSet& other) const {
    check_same_universe(other);
    std::size_t count = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        count += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    }
    return count;
}

std::size_t VertexSet::hash() const noexcept {
    // splitmix64 finalizer folded over the words
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (Word w : words_) {
        std::uint64_t x = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        h ^= x ^ (x >> 31);
    }
    return static_cast<std::size_t>(h);
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first();
    Vertex y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y) return x < y;
        x = a.next_after(x);
        y = b.next_after(y);
    }
    return x < 0 && y >= 0;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
    auto sa = a.size();
    auto sb = b.size();
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
}

std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Vertex v) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    });
    out += '}';
    return out;
}

VertexSet parse_vertex_set(std::string_view text, std::size_t universe) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw ParseError(0, "vertex set must look like {1,2,3}: '" + std::string(text) + "'");
    }
    VertexSet out(universe);
    std::string_view body = trim(text.substr(1, text.size() - 2));
    if (body.empty()) return out;
    while (true) {
        auto comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        long long id = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError(0, "bad vertex id '" + std::string(item) + "' in set");
        }
        if (id < 1 || static_cast<std::size_t>(id) > universe) {
            throw ParseError(0, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(universe));
        }
        if (out.contains(static_cast<Vertex>(id - 1))) {
            throw ParseError(0, "duplicate vertex id " + std::to_string(id) + " in set");
        }
        out.insert(static_cast<Vertex>(id - 1));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace domreconf
