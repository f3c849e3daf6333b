#pragma once

#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

namespace ramsey {

// Fixed-size bitset backed by 64-bit words. Used for vertex sets and
// adjacency rows; all set operations keep the tail bits beyond size() zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n, bool fill = false) : n_(n), w_((n + 63) / 64, 0) {
        if (fill) set_all();
    }

    int size() const { return n_; }
    int words() const { return static_cast<int>(w_.size()); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear_all() { std::fill(w_.begin(), w_.end(), 0); }
    void set_all() {
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        trim();
    }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    void and_rows(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= row[i];
    }
    void subtract_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~row[i];
    }

    // next set bit >= from, or -1
    int next(int from) const {
        if (from >= n_) return -1;
        int wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + std::countr_zero(cur);
            if (++wi >= static_cast<int>(w_.size())) return -1;
            cur = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
    }
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline int intersection_count(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

// next set bit >= from in a raw row of nbits bits, or -1
inline int next_bit(const std::uint64_t* row, int nbits, int from) {
    if (from >= nbits) return -1;
    int words = (nbits + 63) / 64;
    int wi = from >> 6;
    std::uint64_t cur = row[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (cur) {
            int b = (wi << 6) + std::countr_zero(cur);
            return b < nbits ? b : -1;
        }
        if (++wi >= words) return -1;
        cur = row[wi];
    }
}

// Square 0/1 matrix with bit-packed rows (adjacency, arc matrices).
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
    std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * words_; }

    bool test(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
    void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
    void reset(int i, int j) { row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }

    int row_count(int i) const {
        const std::uint64_t* r = row(i);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
        return c;
    }

    bool operator==(const BitMatrix& o) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// Partition [0, total) across up to n_threads workers; f(begin, end) must be
// safe to run concurrently on disjoint ranges.
template <typename F>
void parallel_for(int n_threads, long long total, F&& f) {
    if (n_threads <= 1 || total < 2) {
        f(0LL, total);
        return;
    }
    int workers = std::min<long long>(n_threads, total);
    std::vector<std::thread> pool;
    long long chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        long long lo = t * chunk;
        long long hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] { f(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ramsey
