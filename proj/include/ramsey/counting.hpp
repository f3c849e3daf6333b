#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramsey/product.hpp"
#include "ramsey/util.hpp"

namespace ramsey {

inline double log2_mpz(const mpz_class& x) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    long e;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log2(m) + static_cast<double>(e);
}

// Exact count (arbitrary precision) or a log2 upper bound. Oracle counts are
// exact; formula values are upper bounds and must dominate the oracle.
struct CountResult {
    bool has_exact = false;
    mpz_class exact;
    double log2_value = 0;
    bool is_upper_bound = false;
    std::string method;  // "oracle" | "formula"
    std::string params;
    bool inconclusive = false;
    std::uint64_t nodes = 0;

    static CountResult from_exact(mpz_class v, std::string method, std::string params,
                                  std::uint64_t nodes = 0) {
        CountResult r;
        r.has_exact = true;
        r.exact = std::move(v);
        r.log2_value = log2_mpz(r.exact);
        r.method = std::move(method);
        r.params = std::move(params);
        r.nodes = nodes;
        return r;
    }
    static CountResult from_bound(double log2v, std::string method, std::string params) {
        CountResult r;
        r.log2_value = log2v;
        r.is_upper_bound = true;
        r.method = std::move(method);
        r.params = std::move(params);
        return r;
    }
    static CountResult failed(std::string method, std::string params, std::uint64_t nodes) {
        CountResult r;
        r.inconclusive = true;
        r.method = std::move(method);
        r.params = std::move(params);
        r.nodes = nodes;
        return r;
    }
};

struct CountLimits {
    std::uint64_t node_budget = 1000000000ULL;
};

// Exact number of forward independent k-tuples of D: elements of V(D)^k,
// repeats allowed, no arc (v_i, v_j) with i < j. DFS over prefixes; the
// candidate set for the next entry is the complement of the union of out-
// neighborhoods of the chosen prefix. The last level is counted in bulk.
inline CountResult fwi_count(const PairDigraph& d, int k, CountLimits limits = {}) {
    std::string params = "fwi;k=" + std::to_string(k) + ";V=" + std::to_string(d.size());
    if (k < 1) throw std::invalid_argument("fwi_count needs k >= 1");
    int n = d.size();
    if (n == 0) return CountResult::from_exact(0, "oracle", params);
    BitMatrix arcs = materialize_arcs(d);
    mpz_class total = 0;
    std::uint64_t nodes = 0;
    bool over_budget = false;

    std::function<void(const Bitset&, int)> rec = [&](const Bitset& allowed, int depth) {
        if (over_budget) return;
        if (depth == k - 1) {
            total += allowed.count();
            return;
        }
        for (int v = allowed.next(0); v >= 0; v = allowed.next(v + 1)) {
            if (++nodes > limits.node_budget) {
                over_budget = true;
                return;
            }
            Bitset next = allowed;
            next.subtract_row(arcs.row(v));
            if (next.any()) rec(next, depth + 1);
        }
    };

    Bitset all(n, true);
    rec(all, 0);
    if (over_budget) return CountResult::failed("oracle", params, nodes);
    return CountResult::from_exact(total, "oracle", params, nodes);
}

// Exact number of bad 2k-tuples over F_2^p: (a_1, b_1, ..., a_k, b_k) with
// <a_j, b_i> = 1 for all j <= i. Structured DFS: choose a_i, then the b_i
// choices form an affine subspace of dimension p - rank{a_1..a_i} (or are
// empty when the augmented system is inconsistent).
inline CountResult bad_tuple_count(int p, int k, CountLimits limits = {}) {
    std::string params = "bad-tuples;p=" + std::to_string(p) + ";k=" + std::to_string(k);
    if (p < 1 || p > 8) throw std::invalid_argument("bad_tuple_count needs 1 <= p <= 8");
    if (k < 1 || k > 6) throw std::invalid_argument("bad_tuple_count needs 1 <= k <= 6");
    mpz_class total = 0;
    std::uint64_t nodes = 0;
    bool over_budget = false;
    std::uint32_t full = (p == 32) ? ~0u : ((1u << p) - 1);

    // augmented echelon basis: rows (mask, rhs) with distinct pivots
    std::vector<std::pair<std::uint32_t, std::uint32_t>> basis;

    std::function<void(int, int)> rec = [&](int i, int exp_acc) {
        if (over_budget) return;
        for (std::uint32_t a = 0; a <= full; ++a) {
            if (++nodes > limits.node_budget) {
                over_budget = true;
                return;
            }
            std::uint32_t v = a, r = 1;
            for (auto [bm, br] : basis) {
                std::uint32_t pivot = bm & ~(bm - 1);  // lowest set bit as pivot
                if (v & pivot) {
                    v ^= bm;
                    r ^= br;
                }
            }
            int rank_inc;
            if (v == 0) {
                if (r == 1) continue;  // 0 . y = 1: inconsistent, no b_i
                rank_inc = 0;
            } else {
                rank_inc = 1;
            }
            int rank = static_cast<int>(basis.size()) + rank_inc;
            int choices_exp = p - rank;  // 2^(p - rank) choices for b_i
            if (rank_inc) basis.emplace_back(v, r);
            if (i == k) {
                total += mpz_class(1) << (exp_acc + choices_exp);
            } else {
                rec(i + 1, exp_acc + choices_exp);
            }
            if (rank_inc) basis.pop_back();
            if (over_budget) return;
        }
    };

    rec(1, 0);
    if (over_budget) return CountResult::failed("oracle", params, nodes);
    return CountResult::from_exact(total, "oracle", params, nodes);
}

// The rank-sequence bound: sum_{t=1}^{s-1} C(k, t) 2^{(s-1)(t+k) - C(t+1, 2)},
// evaluated exactly in arbitrary precision.
inline CountResult rank_formula_bound(int s, int k) {
    std::string params = "rank-bound;s=" + std::to_string(s) + ";k=" + std::to_string(k);
    if (s < 4) throw std::invalid_argument("rank_formula_bound needs s >= 4");
    if (k < 1) throw std::invalid_argument("rank_formula_bound needs k >= 1");
    mpz_class total = 0;
    for (long t = 1; t <= s - 1; ++t) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(t));
        if (binom == 0) continue;
        long e = (s - 1) * (t + k) - t * (t + 1) / 2;
        total += binom << e;
    }
    auto r = CountResult::from_exact(total, "formula", params);
    r.is_upper_bound = true;
    return r;
}

// Diagnostic breakdown of the rank-formula sum: log2 of each summand
// M_t = C(k, t) 2^((s-1)(t+k) - C(t+1,2)), plus the simplified exponent
// (3/2)s^2 + as - (5/2)s of its near-diagonal form with the o(s) term
// dropped. Informational only; comparisons always use the exact sum.
struct RankFormulaDiagnostic {
    std::vector<double> log2_terms;  // index t-1 holds M_t
    double simplified_exponent = 0;  // valid when k >= s (a = k - s >= 0)
};

inline RankFormulaDiagnostic rank_formula_terms(int s, int k) {
    if (s < 4 || k < 1) throw std::invalid_argument("rank_formula_terms needs s >= 4, k >= 1");
    RankFormulaDiagnostic out;
    for (long t = 1; t <= s - 1; ++t) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(t));
        long e = (s - 1) * (t + k) - t * (t + 1) / 2;
        out.log2_terms.push_back(binom == 0 ? -std::numeric_limits<double>::infinity()
                                            : log2_mpz(binom) + static_cast<double>(e));
    }
    double a = k - s;
    out.simplified_exponent = 1.5 * s * s + a * s - 2.5 * s;
    return out;
}

// log2 of the spectral bound fwi_k(D) <= 16^k eta^(k-w) (d(F) n)^k, for k >= w.
inline CountResult spectral_fwi_bound(const PairSystem& pair, double k) {
    std::string params = "spectral-bound;k=" + std::to_string(k);
    if (k < pair.w)
        throw std::invalid_argument("spectral_fwi_bound requires k >= w (lemma hypothesis)");
    double dfn = static_cast<double>(pair.product_vertices());
    double log2_eta = pair.eta.log2_value();
    double eta_term;
    if (pair.eta.is_zero()) {
        eta_term = (k > pair.w) ? -std::numeric_limits<double>::infinity() : 0.0;
    } else {
        eta_term = (k - pair.w) * log2_eta;
    }
    double v = 4.0 * k + eta_term + k * std::log2(dfn);
    return CountResult::from_bound(v, "formula", params);
}

// Prefix ranks r_0 = 0, r_i = dim span{a_1..a_i} over F_2, via incremental
// elimination.
inline std::vector<int> rank_sequence_of(std::span<const std::uint32_t> vectors, int p) {
    std::vector<std::uint32_t> basis;  // reduced rows with distinct lowest-bit pivots
    std::vector<int> r{0};
    std::uint32_t mask = (p >= 32) ? ~0u : ((1u << p) - 1);
    for (std::uint32_t a : vectors) {
        std::uint32_t v = a & mask;
        for (std::uint32_t b : basis)
            if (v & (b & ~(b - 1))) v ^= b;
        if (v) basis.push_back(v);
        r.push_back(static_cast<int>(basis.size()));
    }
    return r;
}

inline bool rank_sequence_valid(std::span<const int> r, int p) {
    if (r.empty() || r[0] != 0) return false;
    if (r.size() > 1 && r[1] != 1) return false;
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != r[i - 1] && r[i] != r[i - 1] + 1) return false;
    return r.back() <= p;
}

}  // namespace ramsey
