#ifndef LKCONVEX_VERTEX_SET_HPP
#define LKCONVEX_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace lkconvex {

using vertex_t = std::uint32_t;

/// Bitset over the vertex ids 0..universe-1 of one host graph.
///
/// Every binary operation expects both operands to share the same universe.
/// Iteration always visits members in ascending id order.
class VertexSet {
    using word_t = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = vertex_t;
        using difference_type = std::ptrdiff_t;
        using pointer = const vertex_t*;
        using reference = vertex_t;

        const_iterator() = default;

        vertex_t operator*() const { return static_cast<vertex_t>(pos_); }

        const_iterator& operator++() {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        friend class VertexSet;
        const_iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) {}

        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<vertex_t> members) : VertexSet(universe) {
        for (vertex_t v : members) insert(v);
    }

    VertexSet(std::size_t universe, std::span<const vertex_t> members) : VertexSet(universe) {
        for (vertex_t v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~word_t{0};
        s.trim();
        return s;
    }

    /// Members are the set bits of `mask` (universe must be at most 64).
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(vertex_t v) const noexcept {
        return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1u);
    }

    void insert(vertex_t v) {
        check(v);
        words_[v / word_bits] |= word_t{1} << (v % word_bits);
    }

    void erase(vertex_t v) {
        check(v);
        words_[v / word_bits] &= ~(word_t{1} << (v % word_bits));
    }

    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (word_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](word_t w) { return w == 0; });
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders sets by their ascending member sequences, lexicographically.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (auto c = *ia <=> *ib; c != 0) return c;
        if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
        return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    const_iterator begin() const { return {this, next_from(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<vertex_t> to_vector() const { return {begin(), end()}; }

    /// Smallest member; the set must be nonempty.
    vertex_t front() const { return *begin(); }

private:
    std::size_t next_from(std::size_t pos) const noexcept {
        if (pos >= universe_) return universe_;
        std::size_t wi = pos / word_bits;
        word_t w = words_[wi] & (~word_t{0} << (pos % word_bits));
        while (true) {
            if (w) {
                std::size_t p = wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
                return p < universe_ ? p : universe_;
            }
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }

    void check(vertex_t v) const {
        if (v >= universe_)
            throw InvalidVertex("vertex " + std::to_string(v) + " outside 0.."
                                + std::to_string(universe_ == 0 ? 0 : universe_ - 1));
    }

    void trim() noexcept {
        if (universe_ % word_bits && !words_.empty())
            words_.back() &= (word_t{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word_t> words_;
};

/// Sorted comma-separated ids, each shifted by `label_base`.
inline std::string format_set(const VertexSet& s, vertex_t label_base = 0) {
    std::string out;
    for (vertex_t v : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + label_base);
    }
    return out;
}

/// Inverse of format_set. Whitespace around ids is ignored; an empty string is the empty set.
inline VertexSet parse_set(std::string_view text, std::size_t universe, vertex_t label_base = 0) {
    VertexSet s(universe);
    std::size_t pos = 0;
    auto trim = [](std::string_view t) {
        while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
        return t;
    };
    if (trim(text).empty()) return s;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        long long value = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
            throw InvalidArgument("bad vertex id '" + std::string(tok) + "' in set '" + std::string(text) + "'");
        long long id = value - static_cast<long long>(label_base);
        if (id < 0 || static_cast<std::size_t>(id) >= universe)
            throw InvalidVertex("vertex " + std::to_string(value) + " is not in the graph");
        s.insert(static_cast<vertex_t>(id));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return s;
}

} // namespace lkconvex

#endif // LKCONVEX_VERTEX_SET_HPP
