#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ramsey {

/// Fixed-width dynamic bitset used for adjacency rows and vertex sets.
/// Width is chosen at construction and never changes; all binary
/// operations require operands of equal width.
class Bits {
public:
    Bits() = default;

    explicit Bits(int width) : width_(width), words_((width + 63) / 64, 0) {}

    static Bits full(int width) {
        Bits b(width);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    int width() const { return width_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    bool none() const { return !any(); }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Removes from this set every bit present in o.
    Bits& subtract(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) {
        a &= b;
        return a;
    }

    friend Bits operator|(Bits a, const Bits& b) {
        a |= b;
        return a;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    bool operator==(const Bits& o) const = default;

    /// Index of the lowest set bit at or above `from`, or -1 if none.
    int next(int from = 0) const {
        if (from >= width_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return wi * 64 + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    void trim() {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (~std::uint64_t{0}) >> (64 - width_ % 64);
    }

    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ramsey
