#pragma once

#include <cstdint>
#include <vector>

namespace ramsey {

// Deterministic seedable generators. Streams for independent random maps are
// derived with derive_stream(seed, c); the rule is fixed so a run is fully
// reproducible from (seed, stream index) within one build.

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }
    std::uint64_t next() {
        auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    std::uint64_t s_[4];
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    return sm.next();
}

// Unbiased uniform draw from [0, n) by rejection.
inline std::uint64_t uniform_below(Xoshiro256ss& rng, std::uint64_t n) {
    if (n < 2) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = rng.next();
    } while (x > limit);
    return x % n;
}

inline bool bernoulli(Xoshiro256ss& rng, double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    // threshold = p * 2^64, drawn against a full 64-bit word
    long double t = static_cast<long double>(p) * 18446744073709551616.0L;
    std::uint64_t thr = t >= 18446744073709551615.0L ? ~std::uint64_t{0}
                                                     : static_cast<std::uint64_t>(t);
    return rng.next() < thr;
}

template <typename T>
void shuffle(std::vector<T>& v, Xoshiro256ss& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = uniform_below(rng, i);
        std::swap(v[i - 1], v[j]);
    }
}

// Uniform random permutation pi of [0, n): pi[v] is the position of v.
inline std::vector<int> random_permutation(int n, Xoshiro256ss& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    shuffle(order, rng);
    std::vector<int> pi(n);
    for (int pos = 0; pos < n; ++pos) pi[order[pos]] = pos;
    return pi;
}

}  // namespace ramsey
