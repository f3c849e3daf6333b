#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ramsey/geometry.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/util.hpp"

namespace ramsey {

// Product digraph of a graph pair (F, G) on a shared vertex set: vertices are
// the ordered F-edges (both orientations of each non-loop edge, loops once as
// (v, v)); there is an arc (a1, b1) -> (a2, b2) iff a1 b2 is an edge of G.
// Arcs are evaluated through the underlying G adjacency; use materialize_arcs
// for the search and counting kernels.
struct PairDigraph {
    LoopyGraph f, g;
    std::vector<std::pair<int, int>> verts;  // lexicographic in (a, b)
    bool loopless = false;

    int size() const { return static_cast<int>(verts.size()); }
    bool arc(int i, int j) const { return g.edge(verts[i].first, verts[j].second); }
    bool has_loop_at(int i) const { return arc(i, i); }
};

inline PairDigraph build_pair_digraph(const LoopyGraph& f, const LoopyGraph& g) {
    if (f.size() != g.size()) throw std::invalid_argument("pair digraph needs a shared vertex set");
    long long total = 0;
    for (int v = 0; v < f.size(); ++v) total += f.degree(v);
    if (total > 1000000) throw std::invalid_argument("pair digraph exceeds 10^6 vertices");
    PairDigraph d{f, g, {}, true};
    d.verts.reserve(total);
    for (int a = 0; a < f.size(); ++a)
        for (int b = 0; b < f.size(); ++b)
            if (f.edge(a, b)) {
                d.verts.emplace_back(a, b);
                if (g.edge(a, b)) d.loopless = false;
            }
    return d;
}

// The characteristic-2 construction: underlying graph on the nonzero vectors
// of F_2^(s-1) with x ~ y iff <x, y> = 0; D's vertices are the ordered pairs
// with <x, y> = 1 and (x, y) -> (x', y') iff <x, y'> = 0. Equals the pair
// digraph of (complement(G(s-2, 2)), G(s-2, 2)) up to vertex relabeling.
inline PairDigraph build_f2_digraph(int s) {
    if (s < 4 || s > 14) throw std::invalid_argument("build_f2_digraph needs 4 <= s <= 14");
    int p = s - 1;
    int n = (1 << p) - 1;  // nonzero vectors, vertex v <-> vector v+1
    LoopyGraph g(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x; y <= n; ++y)
            if (std::popcount(static_cast<unsigned>(x & y)) % 2 == 0) g.add_edge(x - 1, y - 1);
    return build_pair_digraph(complement(g), g);
}

// The vertex-count expression stated alongside the construction,
// 2^(2s-3) - 2^(s-1) - 2^(s-2) + 1; it counts the *adjacent* ordered pairs
// of the underlying graph and differs from the defined vertex set (see
// f2_vertex_count). Certificates report both values.
inline long long f2_stated_vertex_count(int s) {
    long long p = s - 1;
    return ((1LL << p) - 1) * ((1LL << (p - 1)) - 1);
}

inline long long f2_vertex_count(int s) {
    long long p = s - 1;
    return ((1LL << p) - 1) * (1LL << (p - 1));
}

// Out-neighborhood bit rows of a pair digraph; kernels need random access to
// full rows, so the size is capped.
inline BitMatrix materialize_arcs(const PairDigraph& d, int cap = 8192) {
    int n = d.size();
    if (n > cap) throw std::invalid_argument("digraph too large to materialize arc rows");
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.arc(i, j)) m.set(i, j);
    return m;
}

// eta = max{ lambda(G)^2/d(G)^2, lambda(F) lambda(G) / (d(F) d(G)) }, kept
// exact: the two terms are compared via their squares, and the value itself
// is stored as the exact rational eta^2 (plus the rational form when eta is
// itself rational).
struct EtaValue {
    mpq_class eta_squared;
    bool is_rational = false;
    mpq_class eta_rational;  // valid when is_rational

    double value() const { return std::sqrt(eta_squared.get_d()); }
    bool is_zero() const { return eta_squared == 0; }
    // log2(eta) = log2(eta^2) / 2, computed from the exact rational
    double log2_value() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        long exp_num, exp_den;
        double dn = mpz_get_d_2exp(&exp_num, eta_squared.get_num().get_mpz_t());
        double dd = mpz_get_d_2exp(&exp_den, eta_squared.get_den().get_mpz_t());
        return (std::log2(dn) + exp_num - std::log2(dd) - exp_den) / 2.0;
    }
};

struct PairSystem {
    SpectralCertificate cert_f, cert_g;
    int n = 0;
    EtaValue eta;
    double w = 0;  // 4 n ln(n) / d(G)

    long long product_vertices() const { return static_cast<long long>(cert_f.d) * n; }
};

inline PairSystem pair_params(const SpectralCertificate& cf, const SpectralCertificate& cg) {
    if (!cf.verified || !cg.verified)
        throw std::invalid_argument("pair_params requires verified certificates");
    if (cf.n != cg.n) throw std::invalid_argument("pair_params: vertex count mismatch");
    PairSystem ps;
    ps.cert_f = cf;
    ps.cert_g = cg;
    ps.n = cg.n;
    mpz_class lf2 = cf.lambda_squared, lg2 = cg.lambda_squared;
    mpz_class df = cf.d, dg = cg.d;
    // term1 = lg2/dg^2, term2 = sqrt(lf2 lg2)/(df dg); compare squares:
    // term1^2 >= term2^2  <=>  lg2 * df^2 >= lf2 * dg^2  (common lg2/dg^2 factored)
    bool term1_wins = lg2 * df * df >= lf2 * dg * dg;
    if (term1_wins) {
        ps.eta.is_rational = true;
        ps.eta.eta_rational = mpq_class(lg2, dg * dg);
        ps.eta.eta_rational.canonicalize();
        ps.eta.eta_squared = ps.eta.eta_rational * ps.eta.eta_rational;
    } else {
        mpz_class num = lf2 * lg2;
        mpz_class den = df * dg;
        ps.eta.eta_squared = mpq_class(num, den * den);
        ps.eta.eta_squared.canonicalize();
        if (mpz_perfect_square_p(num.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), num.get_mpz_t());
            ps.eta.is_rational = true;
            ps.eta.eta_rational = mpq_class(r, den);
            ps.eta.eta_rational.canonicalize();
        }
    }
    ps.w = 4.0 * ps.n * std::log(static_cast<double>(ps.n)) / cg.d;
    return ps;
}

inline PairSystem pair_params(const LoopyGraph& f, const LoopyGraph& g, int threads = 1) {
    return pair_params(certify_spectrum(f, threads), certify_spectrum(g, threads));
}

// Shrinking sequence of a tuple of D-vertices (a_i, b_i):
//   B_i = V minus the union of N_G(a_j), j < i
//   A_i = { u : |N_G(u) cap B_i| <= d(G) |B_i| / (2n) }
//   z_i = 1 iff a_i is in A_i.
struct ShrinkingSequence {
    std::vector<std::uint8_t> z;
    int weight = 0;
};

inline ShrinkingSequence shrinking_sequence(const PairDigraph& d, std::span<const int> tuple) {
    int n = d.g.size();
    int dg = 0;
    if (!d.g.is_regular(&dg)) throw std::invalid_argument("shrinking sequence needs a regular G");
    ShrinkingSequence out;
    Bitset b(n, true);
    for (int idx : tuple) {
        if (idx < 0 || idx >= d.size()) throw std::invalid_argument("tuple vertex out of range");
        int a = d.verts[idx].first;
        long long nb = b.count();
        long long cnt = intersection_count(d.g.row(a), b.data(), b.words());
        bool z = 2LL * n * cnt <= static_cast<long long>(dg) * nb;
        out.z.push_back(z ? 1 : 0);
        out.weight += z ? 1 : 0;
        b.subtract_row(d.g.row(a));
    }
    return out;
}

// Sample a uniformly random forward independent k-tuple by left-to-right
// extension (candidates for v_i are the pairs (a, b) with b outside every
// N_G(a_j), j < i). Returns empty on a dead end.
template <typename Rng>
std::vector<int> sample_forward_independent(const PairDigraph& d, int k, Rng& rng) {
    int nbase = d.g.size();
    std::vector<int> tuple;
    Bitset b(nbase, true);
    for (int i = 0; i < k; ++i) {
        std::vector<int> cand;
        for (int j = 0; j < d.size(); ++j)
            if (b.test(d.verts[j].second)) cand.push_back(j);
        if (cand.empty()) return {};
        int pick = cand[static_cast<std::size_t>(uniform_below(rng, cand.size()))];
        tuple.push_back(pick);
        b.subtract_row(d.g.row(d.verts[pick].first));
    }
    return tuple;
}

}  // namespace ramsey
