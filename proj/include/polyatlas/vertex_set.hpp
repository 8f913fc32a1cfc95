#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace polyatlas {

// Set of vertex indices below kCapacity, stored as a fixed bitmask.
class VertexSet {
public:
    static constexpr int kWords = 2;
    static constexpr int kCapacity = 64 * kWords;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> idx) {
        for (int i : idx) set(i);
    }
    template <typename It>
    VertexSet(It first, It last) {
        for (; first != last; ++first) set(*first);
    }
    static VertexSet range(int n) {
        VertexSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }

    void set(int i) {
        check(i);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        if (i < 0 || i >= kCapacity) return false;
        return (w_[i >> 6] >> (i & 63)) & 1;
    }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool subset_of(const VertexSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int k = 0; k < kWords; ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    int first() const {
        for (int k = 0; k < kWords; ++k)
            if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
        return -1;
    }
    int last() const {
        for (int k = kWords; k-- > 0;)
            if (w_[k]) return 64 * k + 63 - std::countl_zero(w_[k]);
        return -1;
    }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int k = 0; k < kWords; ++k) {
            uint64_t x = w_[k];
            while (x) {
                out.push_back(64 * k + std::countr_zero(x));
                x &= x - 1;
            }
        }
        return out;
    }

    VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] | o.w_[k];
        return r;
    }
    VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & ~o.w_[k];
        return r;
    }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }

    // Lexicographic order of the ascending index lists.
    bool operator<(const VertexSet& o) const {
        VertexSet diff;
        for (int k = 0; k < kWords; ++k) diff.w_[k] = w_[k] ^ o.w_[k];
        int i = diff.first();
        if (i < 0) return false;
        const VertexSet& owner = test(i) ? *this : o;
        const VertexSet& other = test(i) ? o : *this;
        bool other_continues = other.last() > i;
        return (&owner == this) == other_continues;
    }

    size_t hash() const {
        size_t h = 0;
        for (auto x : w_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<uint64_t>{}(x);
        return h;
    }

private:
    static void check(int i) {
        if (i < 0 || i >= kCapacity) throw std::out_of_range("vertex index outside VertexSet capacity");
    }
    std::array<uint64_t, kWords> w_{};
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace polyatlas
