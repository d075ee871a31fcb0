#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace domreconf {

using Vertex = int;

// Set of vertices drawn from a fixed universe 0..universe-1, stored as a bit
// vector. Universes up to 128 vertices live inline (one word up to 64).
// Equal sets over the same universe compare and hash equal.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
    VertexSet(std::size_t universe, std::span<const Vertex> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Vertex v) const noexcept {
        auto i = static_cast<std::size_t>(v);
        return i < universe_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;

    std::vector<Vertex> members() const;

    // Calls f(v) for each member in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * kWordBits + bit));
                bits &= bits - 1;
            }
        }
    }

    // Smallest member, or -1 when empty.
    Vertex first() const noexcept;
    // Smallest member greater than v, or -1.
    Vertex next_after(Vertex v) const noexcept;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    std::size_t symmetric_difference_size(const VertexSet& other) const;

    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
    std::size_t hash() const noexcept;

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ &&
               std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
    }

private:
    void check_same_universe(const VertexSet& other) const;
    void clear_tail() noexcept;

    std::size_t universe_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

// Lexicographic order of the ascending member lists ({0,1} < {0,2} < {1}).
bool lex_less(const VertexSet& a, const VertexSet& b);

// Size first, then lexicographic. Node order of explicit solution spaces.
bool canonical_less(const VertexSet& a, const VertexSet& b);

// "{v1,v2,...}" with 1-based ascending ids.
std::string to_string(const VertexSet& s);

// Inverse of to_string. Throws ParseError on malformed text or ids outside 1..universe.
VertexSet parse_vertex_set(std::string_view text, std::size_t universe);

} // namespace domreconf
