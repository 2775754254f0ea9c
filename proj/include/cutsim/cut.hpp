#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cutsim {

/// Plain subset of the vertex set {0..n-1}, stored as packed 64-bit words
/// (bit i of word i/64 marks vertex i). No canonical-form invariant; used
/// for contraction origin sets and composed-cut algebra.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint32_t n)
        : n_(n), words_((n + 63) / 64, 0) {}

    std::uint32_t size() const { return n_; }

    bool test(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::uint32_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }
    bool full() const { return count() == n_; }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Removes every vertex contained in `o`.
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Membership string, vertex 0 first: "0110" means vertices 1 and 2 in.
    std::string to_string() const {
        std::string s(n_, '0');
        for (std::uint32_t i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    static VertexSet from_string(std::string_view bits) {
        VertexSet v(static_cast<std::uint32_t>(bits.size()));
        for (std::uint32_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') v.set(i);
            else if (bits[i] != '0') throw std::invalid_argument("bit string must contain only 0/1");
        }
        return v;
    }

private:
    void mask_tail() {
        if (n_ % 64) words_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
    }

    std::uint32_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A graph cut in canonical form: the stored side excludes vertex 0 and is
/// neither empty nor the whole vertex set. A bit string and its complement
/// denote the same bipartition and canonicalize to the same Cut.
class Cut {
public:
    Cut() = default;

    std::uint32_t size() const { return side_.size(); }
    bool contains(std::uint32_t v) const { return side_.test(v); }
    const VertexSet& side() const { return side_; }
    std::string to_string() const { return side_.to_string(); }

    friend bool operator==(const Cut& a, const Cut& b) { return a.side_ == b.side_; }

    /// Lexicographic on the membership string (vertex 0 first); this is the
    /// numeric order used for sorted approximation sets and merging.
    friend bool operator<(const Cut& a, const Cut& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        const auto& wa = a.side_.words();
        const auto& wb = b.side_.words();
        for (std::size_t i = 0; i < wa.size(); ++i) {
            std::uint64_t diff = wa[i] ^ wb[i];
            if (diff) {
                std::uint64_t lowest = diff & (0 - diff);
                return (wa[i] & lowest) == 0;
            }
        }
        return false;
    }

    friend class CutBuilder;
    friend Cut canonicalize(const VertexSet& side);

private:
    explicit Cut(VertexSet side) : side_(std::move(side)) {}
    VertexSet side_;
};

/// Canonicalizes a vertex subset into a Cut, flipping to the side that
/// excludes vertex 0. Throws std::invalid_argument if the subset is empty
/// or covers all vertices (no bipartition).
inline Cut canonicalize(const VertexSet& side) {
    if (side.size() < 2) throw std::invalid_argument("cut needs at least 2 vertices");
    if (side.empty() || side.full()) throw std::invalid_argument("invalid cut: one side is empty");
    return Cut(side.test(0) ? side.complement() : side);
}

inline Cut canonicalize(std::string_view bits) {
    return canonicalize(VertexSet::from_string(bits));
}

/// Convenience for n <= 64: bit i of `members` marks vertex i.
inline Cut cut_from_mask(std::uint32_t n, std::uint64_t members) {
    VertexSet v(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if ((members >> i) & 1) v.set(i);
    return canonicalize(v);
}

} // namespace cutsim
