#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace kclique {

// Bitset over a fixed universe [0, n).  The word vector compares
// lexicographically, which gives a canonical total order so sets can be used
// as map keys.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int w = 0; w < (int)s.words_.size(); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] |= 1ULL << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& and_not(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // First member >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int w = from >> 6;
        uint64_t cur = words_[w] >> (from & 63);
        if (cur) return from + std::countr_zero(cur);
        for (++w; w < (int)words_.size(); ++w)
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.words_ < b.words_;
    }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (1ULL << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

// Partial 0/1 assignment over ids [0, n).  Stored as (assigned, value) bit
// pairs; value bits are only meaningful where assigned.
struct PartialAssign {
    VertexSet assigned;
    VertexSet value;

    PartialAssign() = default;
    explicit PartialAssign(int n) : assigned(n), value(n) {}

    bool has(int x) const { return assigned.test(x); }
    bool val(int x) const {
        assert(has(x));
        return value.test(x);
    }
    void set(int x, bool b) {
        assigned.set(x);
        if (b) value.set(x); else value.reset(x);
    }

    int size() const { return assigned.count(); }

    VertexSet ones() const { return assigned & value; }
    VertexSet zeros() const {
        VertexSet z = assigned;
        z.and_not(value);
        return z;
    }

    // Keep only ids assigned in both with equal values.
    void meet(const PartialAssign& o) {
        VertexSet diff = value;
        diff.and_not(o.value);
        VertexSet diff2 = o.value;
        diff2.and_not(value);
        assigned &= o.assigned;
        assigned.and_not(diff);
        assigned.and_not(diff2);
        value &= assigned;
    }

    friend bool operator==(const PartialAssign& a, const PartialAssign& b) {
        if (!(a.assigned == b.assigned)) return false;
        return (a.value & a.assigned) == (b.value & b.assigned);
    }
};

}  // namespace kclique
