#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace emso {

// Bit-packed subset of {0,...,n-1}. Word count is fixed at construction; all
// binary operations require operands over the same universe size.
class VertexSet {
public:
    VertexSet() : nbits_(0) {}
    explicit VertexSet(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int universe_size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t i) const { return words_[i]; }
    std::uint64_t& word(std::size_t i) { return words_[i]; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }
    void clear() { for (auto& w : words_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
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

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool operator==(const VertexSet& o) const = default;

    // First member >= from, or -1 when none.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) {
                int v = static_cast<int>((wi << 6) + std::countr_zero(w));
                return v < nbits_ ? v : -1;
            }
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) fn(v);
    }

    std::vector<int> to_sorted_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static VertexSet full(int nbits) {
        VertexSet s(nbits);
        for (int i = 0; i < nbits; ++i) s.set(i);
        return s;
    }

private:
    int nbits_;
    std::vector<std::uint64_t> words_;
};

} // namespace emso
