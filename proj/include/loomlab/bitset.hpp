#pragma once

#include <boost/container/small_vector.hpp>

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace loomlab {

// Bit set over a fixed universe {0,...,nbits-1}. Universes up to 128 bits
// stay inline; larger ones spill to the heap with identical semantics.
// Binary operations require both operands to share the same word count.
class BitSet {
public:
    BitSet() : nbits_(0), w_(1, 0) {}
    explicit BitSet(int nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

    static BitSet from_indices(int nbits, const std::vector<int>& idx) {
        BitSet s(nbits);
        for (int i : idx) s.set(i);
        return s;
    }

    static BitSet full(int nbits) {
        BitSet s(nbits);
        for (int i = 0; i < (int)s.w_.size(); ++i) s.w_[i] = ~uint64_t(0);
        s.trim();
        return s;
    }

    int universe() const { return nbits_; }
    int words() const { return (int)w_.size(); }
    uint64_t word(int i) const { return w_[i]; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[size_t(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool empty() const { return !any(); }

    bool intersects(const BitSet& o) const {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool disjoint(const BitSet& o) const { return !intersects(o); }

    int intersection_count(const BitSet& o) const {
        assert(w_.size() == o.w_.size());
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i)
            c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }
    bool is_subset_of(const BitSet& o) const {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    BitSet& operator|=(const BitSet& o) {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BitSet& operator&=(const BitSet& o) {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BitSet& operator^=(const BitSet& o) {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    BitSet& subtract(const BitSet& o) {
        assert(w_.size() == o.w_.size());
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { a |= b; return a; }
    friend BitSet operator&(BitSet a, const BitSet& b) { a &= b; return a; }
    BitSet minus(const BitSet& o) const {
        BitSet r(*this);
        r.subtract(o);
        return r;
    }
    BitSet complement() const {
        BitSet r(*this);
        for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = ~r.w_[i];
        r.trim();
        return r;
    }

    bool operator==(const BitSet& o) const {
        return nbits_ == o.nbits_ && w_ == o.w_;
    }
    bool operator!=(const BitSet& o) const { return !(*this == o); }

    // The set read as an nbits-wide integer.
    bool numeric_less(const BitSet& o) const {
        assert(w_.size() == o.w_.size());
        for (size_t i = w_.size(); i-- > 0;) {
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        }
        return false;
    }

    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int((i << 6) + __builtin_ctzll(w_[i]));
        return -1;
    }
    int next(int after) const {
        int i = after + 1;
        if (i >= nbits_) return -1;
        size_t wi = size_t(i) >> 6;
        uint64_t x = w_[wi] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (x) return int((wi << 6) + __builtin_ctzll(x));
            if (++wi >= w_.size()) return -1;
            x = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                f(int((wi << 6) + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    // {a,b,c} with the given base added to every index (1 for human output).
    std::string to_string(int base = 0) const {
        std::string s = "{";
        bool first_el = true;
        for_each([&](int i) {
            if (!first_el) s += ",";
            s += std::to_string(i + base);
            first_el = false;
        });
        s += "}";
        return s;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        h ^= uint64_t(nbits_);
        h *= 1099511628211ull;
        return size_t(h);
    }

    static int words_for(int nbits) { return nbits <= 0 ? 1 : (nbits + 63) >> 6; }

private:
    void trim() {
        if (nbits_ <= 0) {
            for (auto& x : w_) x = 0;
            return;
        }
        int r = nbits_ & 63;
        if (r) w_.back() &= (~uint64_t(0)) >> (64 - r);
        // words beyond the universe, if any, stay zero by construction
    }

    int nbits_;
    boost::container::small_vector<uint64_t, 2> w_;
};

struct BitSetHash {
    size_t operator()(const BitSet& s) const { return s.hash(); }
};

// Canonical edge order: by size, then by numeric value.
inline bool edge_less(const BitSet& a, const BitSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.numeric_less(b);
}

}  // namespace loomlab
