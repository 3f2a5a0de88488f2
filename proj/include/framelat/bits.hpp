#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace framelat {

// Dynamic fixed-width bitset. Width is set at construction and never changes;
// all binary operations require equal widths.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bits singleton(std::size_t nbits, std::size_t i) {
        Bits b(nbits);
        b.set(i);
        return b;
    }
    static Bits full(std::size_t nbits) {
        Bits b(nbits);
        for (std::size_t i = 0; i < nbits; ++i) b.set(i);
        return b;
    }
    static Bits from_mask(std::size_t nbits, std::uint64_t mask) {
        Bits b(nbits);
        if (!b.words_.empty()) b.words_[0] = mask;
        return b;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    // Lowest set bit index, or size() when empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[k]));
        return nbits_;
    }
    // Next set bit at index > i, or size().
    std::size_t next(std::size_t i) const {
        ++i;
        if (i >= nbits_) return nbits_;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++k == words_.size()) return nbits_;
            w = words_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = first(); i < nbits_; i = next(i)) f(i);
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bits& operator-=(const Bits& o) {  // set difference
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    // Numeric order on the underlying value; used for canonical element orders.
    bool operator<(const Bits& o) const {
        for (std::size_t k = words_.size(); k-- > 0;)
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        return false;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h = h * 1099511628211ull ^ w;
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace framelat
