#pragma once

#include <cstdint>
#include <vector>

namespace perfect {

// Fixed-capacity bitset sized at runtime.  All set operations require
// operands of the same size.
struct Bits {
    int n = 0;
    std::vector<uint64_t> w;

    Bits() = default;
    explicit Bits(int n_) : n(n_), w(static_cast<size_t>((n_ + 63) / 64), 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w.begin(), w.end(), 0); }

    void set_all() {
        std::fill(w.begin(), w.end(), ~uint64_t(0));
        trim();
    }

    void trim() {
        if (n & 63) w.back() &= (uint64_t(1) << (n & 63)) - 1;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits andnot(Bits a, const Bits& b) { return a.subtract(b); }

    bool operator==(const Bits& o) const { return w == o.w; }

    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }

    // Smallest set bit, -1 if empty.
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return int(i * 64) + __builtin_ctzll(w[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                int b = __builtin_ctzll(x);
                f(int(i * 64) + b);
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bits from(int n, const std::vector<int>& idx) {
        Bits b(n);
        for (int i : idx) b.set(i);
        return b;
    }
};

} // namespace perfect
