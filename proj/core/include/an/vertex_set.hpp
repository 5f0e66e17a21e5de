#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace an {

using VertexId = std::uint32_t;

/// Set of vertex ids over a fixed universe [0, universe), stored as 64-bit words.
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.trim();
        return s;
    }

    static VertexSet of(std::size_t universe, std::initializer_list<VertexId> ids) {
        VertexSet s(universe);
        for (VertexId v : ids) s.set(v);
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
    void set(VertexId v) {
        check(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }
    void reset(VertexId v) {
        check(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = std::countr_zero(w);
                f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Lexicographic order of the ascending id sequences (a proper prefix
    /// sorts first). Distinct from subset order.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            const std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (!diff) continue;
            const std::uint64_t low = diff & (~diff + 1);
            if (a.words_[i] & low) {
                // a has the smaller differing element; a < b iff b still has
                // members beyond it (otherwise b is a proper prefix of a)
                if (b.words_[i] & ~(low | (low - 1))) return true;
                for (std::size_t j = i + 1; j < b.words_.size(); ++j)
                    if (b.words_[j]) return true;
                return false;
            }
            // b has the smaller differing element; a < b iff a is exhausted
            if (a.words_[i] & ~(low | (low - 1))) return false;
            for (std::size_t j = i + 1; j < a.words_.size(); ++j)
                if (a.words_[j]) return false;
            return true;
        }
        return false;
    }

private:
    void check(VertexId v) const {
        if (v >= universe_) throw std::out_of_range("vertex id outside universe");
    }
    void trim() {
        const std::size_t extra = words_.size() * 64 - universe_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~0ULL >> extra;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace an
