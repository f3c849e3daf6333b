#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramsey/field.hpp"
#include "ramsey/util.hpp"

namespace ramsey {

// Undirected graph with at most one loop per vertex. A loop is the diagonal
// bit of the adjacency row and contributes one to the degree.
class LoopyGraph {
public:
    LoopyGraph() = default;
    explicit LoopyGraph(int n) : n_(n), adj_(n) {}

    int size() const { return n_; }
    int words() const { return adj_.words(); }
    const std::uint64_t* row(int v) const { return adj_.row(v); }

    bool edge(int u, int v) const { return adj_.test(u, v); }
    void add_edge(int u, int v) {
        adj_.set(u, v);
        adj_.set(v, u);
    }
    void remove_edge(int u, int v) {
        adj_.reset(u, v);
        adj_.reset(v, u);
    }
    bool loop(int v) const { return adj_.test(v, v); }

    int degree(int v) const { return adj_.row_count(v); }

    int loop_count() const {
        int c = 0;
        for (int v = 0; v < n_; ++v) c += loop(v);
        return c;
    }
    // loops + edges between distinct vertices (the DIMACS edge count)
    long long edge_count() const {
        long long total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        int l = loop_count();
        return (total - l) / 2 + l;
    }

    bool is_regular(int* d_out = nullptr) const {
        if (n_ == 0) return true;
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return false;
        if (d_out) *d_out = d;
        return true;
    }

    int common_neighbors(int u, int v) const {
        return intersection_count(adj_.row(u), adj_.row(v), adj_.words());
    }

    bool operator==(const LoopyGraph& o) const = default;

private:
    int n_ = 0;
    BitMatrix adj_;
};

// Complement with loops flipped as well: edge uv (u != v) present iff absent,
// loop at v present iff absent. Adjacency matrix is J_n minus the original.
inline LoopyGraph complement(const LoopyGraph& g) {
    int n = g.size();
    LoopyGraph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (!g.edge(u, v)) c.add_edge(u, v);
    return c;
}

inline LoopyGraph induced_subgraph(const LoopyGraph& g, std::span<const int> verts) {
    LoopyGraph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i; j < verts.size(); ++j)
            if (g.edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

// Point of PG(t, q): canonical representative with first nonzero coordinate 1.
struct ProjectivePoint {
    std::vector<std::uint32_t> coords;
    bool operator==(const ProjectivePoint& o) const = default;
};

inline ProjectivePoint canonicalize(const FiniteField& f, std::span<const std::uint32_t> v) {
    for (std::uint32_t x : v) {
        if (x == 0) continue;
        std::uint32_t s = f.inv(x);
        ProjectivePoint p;
        p.coords.reserve(v.size());
        for (std::uint32_t y : v) p.coords.push_back(f.mul(s, y));
        return p;
    }
    throw std::invalid_argument("zero vector has no projective class");
}

// All canonical points of PG(t, q) in a fixed order: grouped by the position
// of the leading 1, remaining coordinates in lexicographic order.
inline std::vector<ProjectivePoint> enumerate_projective_points(const FiniteField& f, int t) {
    std::uint32_t q = f.order();
    std::vector<ProjectivePoint> pts;
    for (int lead = 0; lead <= t; ++lead) {
        int free = t - lead;
        std::vector<std::uint32_t> tail(free, 0);
        while (true) {
            ProjectivePoint p;
            p.coords.assign(t + 1, 0);
            p.coords[lead] = 1;
            for (int i = 0; i < free; ++i) p.coords[lead + 1 + i] = tail[i];
            pts.push_back(std::move(p));
            int i = free - 1;
            while (i >= 0 && tail[i] == q - 1) tail[i--] = 0;
            if (i < 0) break;
            ++tail[i];
        }
    }
    return pts;
}

struct PolarityGraph {
    FiniteField field;
    int t = 0;
    LoopyGraph graph;
    std::vector<ProjectivePoint> points;
};

namespace gdetail {
// factor q = p^m with p prime, or throw
inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    std::uint32_t m = 0, x = q;
    while (x % p == 0) {
        x /= p;
        ++m;
    }
    if (x != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {p, m};
}
}  // namespace gdetail

// The polarity graph G(t, q) on the points of PG(t, q): x ~ y (loops allowed)
// iff <x, y> = sum x_i y_i = 0.
inline PolarityGraph build_polarity_graph(int t, std::uint32_t q) {
    if (t < 2) throw std::invalid_argument("polarity graph needs t >= 2");
    auto [p, m] = gdetail::prime_power(q);
    FiniteField field(p, m);
    long long n = 0;
    {
        long long pw = 1;
        for (int i = 0; i <= t; ++i) pw *= q;
        n = (pw - 1) / (q - 1);
    }
    if (n > 50000) throw std::invalid_argument("polarity graph exceeds 50000 vertices");

    PolarityGraph out{std::move(field), t, LoopyGraph(static_cast<int>(n)), {}};
    out.points = enumerate_projective_points(out.field, t);
    if (static_cast<long long>(out.points.size()) != n)
        throw std::logic_error("projective point count mismatch");
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u; v < static_cast<int>(n); ++v)
            if (inner_product(out.field, out.points[u].coords, out.points[v].coords) == 0)
                out.graph.add_edge(u, v);
    return out;
}

// Exact spectral certificate for graphs with A^2 = a J + (d - a) I: d-regular
// and every distinct pair has exactly a common neighbors. When verified, all
// non-principal eigenvalues are +-sqrt(d - a); lambda is kept as the exact
// integer lambda^2 = d - a.
struct SpectralCertificate {
    int n = 0;
    int d = -1;
    long a = -1;
    long lambda_squared = -1;
    bool verified = false;
    std::string failure;
    int bad_u = -1, bad_v = -1;
};

inline SpectralCertificate certify_spectrum(const LoopyGraph& g, int threads = 1) {
    if (g.size() > 5000) throw std::invalid_argument("certify_spectrum capped at 5000 vertices");
    SpectralCertificate cert;
    cert.n = g.size();
    if (g.size() < 2) {
        cert.failure = "graph too small to certify";
        return cert;
    }
    int d = g.degree(0);
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != d) {
            cert.failure = "not regular";
            cert.bad_u = v;
            return cert;
        }
    cert.d = d;
    long a = g.common_neighbors(0, 1);
    int n = g.size();
    std::atomic<long long> bad_pair{-1};
    parallel_for(threads, n, [&](long long lo, long long hi) {
        for (int u = static_cast<int>(lo); u < static_cast<int>(hi); ++u) {
            if (bad_pair.load(std::memory_order_relaxed) >= 0) return;
            for (int v = u + 1; v < n; ++v)
                if (g.common_neighbors(u, v) != a) {
                    long long expected = -1;
                    bad_pair.compare_exchange_strong(expected, static_cast<long long>(u) * n + v);
                    return;
                }
        }
    });
    if (long long enc = bad_pair.load(); enc >= 0) {
        cert.a = a;
        cert.failure = "common neighbor count not constant";
        cert.bad_u = static_cast<int>(enc / n);
        cert.bad_v = static_cast<int>(enc % n);
        return cert;
    }
    cert.a = a;
    cert.lambda_squared = d - a;
    if (cert.lambda_squared < 0) {
        cert.failure = "d - a negative";
        return cert;
    }
    cert.verified = true;
    return cert;
}

// |e_G(A, B)|, counting ordered pairs (a, b) with ab an edge; a loop at v
// contributes the pair (v, v) when v is in both sets.
inline long long ordered_pair_count(const LoopyGraph& g, const Bitset& a, const Bitset& b) {
    long long e = 0;
    a.for_each([&](int u) { e += intersection_count(g.row(u), b.data(), g.words()); });
    return e;
}

struct MixingCheck {
    long long e = 0;
    long long size_a = 0, size_b = 0;
    double slack = 0;        // lambda sqrt(|A||B|) - |e - (d/n)|A||B||, must be >= 0
    bool holds_exact = false;  // the squared integer comparison
};

// Expander mixing inequality |e_G(A,B) - (d/n)|A||B|| <= lambda sqrt(|A||B|),
// checked exactly by squaring: (n e - d|A||B|)^2 <= (d-a) |A||B| n^2.
inline MixingCheck mixing_slack(const LoopyGraph& g, const SpectralCertificate& cert,
                                const Bitset& a, const Bitset& b) {
    if (!cert.verified) throw std::invalid_argument("mixing_slack requires a verified certificate");
    MixingCheck out;
    out.size_a = a.count();
    out.size_b = b.count();
    out.e = ordered_pair_count(g, a, b);
    long n = cert.n, d = cert.d;
    mpz_class szprod = mpz_class(static_cast<long>(out.size_a)) * static_cast<long>(out.size_b);
    mpz_class lhs = mpz_class(n) * static_cast<long>(out.e) - d * szprod;
    lhs *= lhs;
    mpz_class rhs = static_cast<long>(cert.lambda_squared) * szprod * n * n;
    out.holds_exact = lhs <= rhs;
    double ab = static_cast<double>(out.size_a) * static_cast<double>(out.size_b);
    out.slack = std::sqrt(static_cast<double>(cert.lambda_squared) * ab) -
                std::fabs(static_cast<double>(out.e) - static_cast<double>(d) / n * ab);
    return out;
}

// The low-degree side A = { u : |N(u) cap B| <= d|B| / (2n) } (integer compare);
// whenever mixing holds, |A||B| <= 4 lambda^2 n^2 / d^2.
inline Bitset low_degree_set(const LoopyGraph& g, int d, const Bitset& b) {
    Bitset a(g.size());
    long long nb = b.count();
    for (int u = 0; u < g.size(); ++u) {
        long long cnt = intersection_count(g.row(u), b.data(), g.words());
        if (2LL * g.size() * cnt <= static_cast<long long>(d) * nb) a.set(u);
    }
    return a;
}

}  // namespace ramsey
