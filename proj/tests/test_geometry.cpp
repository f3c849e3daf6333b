#include <catch2/catch.hpp>

#include <gmpxx.h>

#include "ramsey/geometry.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

long long pg_n(int t, long long q) { return (ipow(q, t + 1) - 1) / (q - 1); }
long long pg_d(int t, long long q) { return (ipow(q, t) - 1) / (q - 1); }
long long pg_a(int t, long long q) { return (ipow(q, t - 1) - 1) / (q - 1); }

Bitset random_subset(int n, Xoshiro256ss& rng) {
    Bitset b(n);
    for (int v = 0; v < n; ++v)
        if (rng.next() & 1) b.set(v);
    return b;
}

// oracle for e_G(A, B): direct double loop over ordered pairs
long long brute_ordered_pairs(const LoopyGraph& g, const Bitset& a, const Bitset& b) {
    long long e = 0;
    for (int u = 0; u < g.size(); ++u)
        if (a.test(u))
            for (int v = 0; v < g.size(); ++v)
                if (b.test(v) && g.edge(u, v)) ++e;
    return e;
}

}  // namespace

TEST_CASE("polarity graph parameters match the closed formulas") {
    for (auto [t, q] : {std::pair{2, 2u}, {2, 3u}, {3, 2u}, {2, 4u}, {2, 5u}}) {
        auto pg = build_polarity_graph(t, q);
        INFO("t=" << t << " q=" << q);
        REQUIRE(pg.graph.size() == pg_n(t, q));
        for (int v = 0; v < pg.graph.size(); ++v) REQUIRE(pg.graph.degree(v) == pg_d(t, q));
        // every distinct pair has exactly (q^(t-1) - 1)/(q - 1) common neighbors
        auto cert = certify_spectrum(pg.graph);
        REQUIRE(cert.verified);
        REQUIRE(cert.a == pg_a(t, q));
        // loop count oracle: enumerate self-orthogonal canonical points
        int self_orth = 0;
        for (auto& pt : pg.points)
            if (inner_product(pg.field, pt.coords, pt.coords) == 0) ++self_orth;
        REQUIRE(pg.graph.loop_count() == self_orth);
    }
}

TEST_CASE("specific polarity instances") {
    auto g22 = build_polarity_graph(2, 2);
    REQUIRE(g22.graph.size() == 7);
    REQUIRE(g22.graph.degree(0) == 3);
    REQUIRE(g22.graph.loop_count() == 3);

    auto g23 = build_polarity_graph(2, 3);
    REQUIRE(g23.graph.size() == 13);
    REQUIRE(g23.graph.degree(0) == 4);
    // q + 1 = 4 absolute points of the conic x1^2 + x2^2 + x3^2 = 0 over F_3,
    // e.g. (1,1,1); enumeration above pins the same value
    REQUIRE(g23.graph.loop_count() == 4);
    bool found_111 = false;
    for (int v = 0; v < 13; ++v)
        if (g23.points[v].coords == std::vector<std::uint32_t>{1, 1, 1}) {
            found_111 = true;
            REQUIRE(g23.graph.loop(v));
        }
    REQUIRE(found_111);

    auto g32 = build_polarity_graph(3, 2);
    REQUIRE(g32.graph.size() == 15);
    REQUIRE(g32.graph.degree(0) == 7);

    REQUIRE_THROWS_AS(build_polarity_graph(1, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(build_polarity_graph(2, 6), std::invalid_argument);
    REQUIRE_THROWS_AS(build_polarity_graph(2, 251), std::invalid_argument);  // n > 50000
}

TEST_CASE("canonical representatives are scaling-invariant") {
    FiniteField f(2, 2);  // GF(4)
    std::vector<std::uint32_t> v{2, 3, 1};
    auto canon = canonicalize(f, v);
    REQUIRE(canon.coords[0] == 1);  // first nonzero coordinate scaled to 1
    for (std::uint32_t s = 1; s < 4; ++s) {
        std::vector<std::uint32_t> scaled(3);
        for (int i = 0; i < 3; ++i) scaled[i] = f.mul(s, v[i]);
        REQUIRE(canonicalize(f, scaled) == canon);
    }
    std::vector<std::uint32_t> zero{0, 0, 0};
    REQUIRE_THROWS_AS(canonicalize(f, zero), std::invalid_argument);

    // every enumerated point is canonical and distinct
    auto pts = enumerate_projective_points(f, 2);
    REQUIRE(pts.size() == 21);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t lead = 0;
        while (pts[i].coords[lead] == 0) ++lead;
        REQUIRE(pts[i].coords[lead] == 1);
        for (std::size_t j = i + 1; j < pts.size(); ++j) REQUIRE_FALSE(pts[i] == pts[j]);
    }
}

TEST_CASE("complement flips edges and loops") {
    auto g23 = build_polarity_graph(2, 3);
    auto f = complement(g23.graph);
    for (int v = 0; v < f.size(); ++v) REQUIRE(f.degree(v) == 13 - 4);
    REQUIRE(complement(f) == g23.graph);
    REQUIRE(f.loop_count() == 13 - 4);

    LoopyGraph single(1);
    auto sc = complement(single);
    REQUIRE(sc.loop(0));
    REQUIRE(complement(sc).loop(0) == false);
}

TEST_CASE("spectral certification of polarity graphs") {
    auto g23 = build_polarity_graph(2, 3);
    auto c = certify_spectrum(g23.graph);
    REQUIRE(c.verified);
    REQUIRE(c.n == 13);
    REQUIRE(c.d == 4);
    REQUIRE(c.a == 1);
    REQUIRE(c.lambda_squared == 3);

    auto c2 = certify_spectrum(build_polarity_graph(2, 2).graph);
    REQUIRE(c2.verified);
    REQUIRE(c2.n == 7);
    REQUIRE(c2.d == 3);
    REQUIRE(c2.a == 1);
    REQUIRE(c2.lambda_squared == 2);

    // complement is certifiable too: A_F = J - A_G
    auto cf = certify_spectrum(complement(g23.graph));
    REQUIRE(cf.verified);
    REQUIRE(cf.d == 9);
    REQUIRE(cf.a == 13 - 2 * 4 + 1);
    REQUIRE(cf.lambda_squared == 3);

    // multithreaded verification agrees
    auto cpar = certify_spectrum(g23.graph, 2);
    REQUIRE(cpar.verified);
    REQUIRE(cpar.a == c.a);

    // extension-field instances: GF(8) and GF(9) coordinates
    auto c8 = certify_spectrum(build_polarity_graph(2, 8).graph, 2);
    REQUIRE(c8.verified);
    REQUIRE(c8.n == 73);
    REQUIRE(c8.d == 9);
    REQUIRE(c8.a == 1);
    auto c9 = certify_spectrum(build_polarity_graph(2, 9).graph, 2);
    REQUIRE(c9.verified);
    REQUIRE(c9.n == 91);
    REQUIRE(c9.d == 10);
    REQUIRE(c9.a == 1);
    auto c16 = certify_spectrum(build_polarity_graph(2, 16).graph, 2);
    REQUIRE(c16.verified);
    REQUIRE(c16.n == 273);
    REQUIRE(c16.d == 17);
    REQUIRE(c16.a == 1);
}

TEST_CASE("a single flipped edge breaks the certificate") {
    auto g23 = build_polarity_graph(2, 3);
    LoopyGraph g = g23.graph;
    // swap one edge for a non-edge; regularity or the entrywise identity must fail
    int u = 0, v = -1, w = -1;
    for (int x = 1; x < g.size(); ++x) {
        if (g.edge(u, x) && v < 0) v = x;
        if (!g.edge(u, x) && w < 0) w = x;
    }
    g.remove_edge(u, v);
    g.add_edge(u, w);
    auto cert = certify_spectrum(g);
    REQUIRE_FALSE(cert.verified);
}

TEST_CASE("certification failures carry a reason") {
    LoopyGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    auto cert = certify_spectrum(c4);
    REQUIRE_FALSE(cert.verified);
    REQUIRE(cert.failure == "common neighbor count not constant");
    REQUIRE(cert.bad_u >= 0);

    LoopyGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto cp = certify_spectrum(path);
    REQUIRE_FALSE(cp.verified);
    REQUIRE(cp.failure == "not regular");

    LoopyGraph big(5001);
    REQUIRE_THROWS_AS(certify_spectrum(big), std::invalid_argument);
}

TEST_CASE("mixing slack basics") {
    auto g23 = build_polarity_graph(2, 3);
    auto cert = certify_spectrum(g23.graph);
    int n = g23.graph.size();

    Bitset all(n, true);
    auto mc = mixing_slack(g23.graph, cert, all, all);
    REQUIRE(mc.e == static_cast<long long>(n) * cert.d);
    REQUIRE(mc.holds_exact);
    REQUIRE(mc.slack == Approx(std::sqrt(3.0) * n));

    Bitset empty(n);
    auto me = mixing_slack(g23.graph, cert, empty, all);
    REQUIRE(me.holds_exact);
    REQUIRE(me.e == 0);
    REQUIRE(me.slack == 0.0);

    SpectralCertificate fake;
    REQUIRE_THROWS_AS(mixing_slack(g23.graph, fake, all, all), std::invalid_argument);
}

TEST_CASE("mixing slack on neighborhood sets, oracle-checked") {
    auto g23 = build_polarity_graph(2, 3);
    auto cert = certify_spectrum(g23.graph);
    int n = g23.graph.size();
    int v = 0;
    Bitset a(n), b(n);
    for (int u = 0; u < n; ++u) {
        if (g23.graph.edge(u, v)) a.set(u);  // N(v)
        else b.set(u);                       // <u, v> != 0
    }
    auto mc = mixing_slack(g23.graph, cert, a, b);
    REQUIRE(mc.e == brute_ordered_pairs(g23.graph, a, b));
    REQUIRE(mc.holds_exact);
    REQUIRE(mc.slack >= 0.0);
}

TEST_CASE("mixing inequality holds on random set pairs") {
    Xoshiro256ss rng(2024);
    for (std::uint32_t q : {3u, 4u}) {
        auto pg = build_polarity_graph(2, q);
        auto cert = certify_spectrum(pg.graph);
        for (int trial = 0; trial < 200; ++trial) {
            Bitset a = random_subset(pg.graph.size(), rng);
            Bitset b = random_subset(pg.graph.size(), rng);
            auto mc = mixing_slack(pg.graph, cert, a, b);
            REQUIRE(mc.holds_exact);
            REQUIRE(mc.e == brute_ordered_pairs(pg.graph, a, b));
        }
    }
}

TEST_CASE("low-degree set corollary |A||B| <= 4 lambda^2 n^2 / d^2") {
    Xoshiro256ss rng(7);
    for (std::uint32_t q : {3u, 4u}) {
        auto pg = build_polarity_graph(2, q);
        auto cert = certify_spectrum(pg.graph);
        long n = pg.graph.size();
        for (int trial = 0; trial < 100; ++trial) {
            Bitset b = random_subset(pg.graph.size(), rng);
            Bitset a = low_degree_set(pg.graph, cert.d, b);
            mpz_class lhs = mpz_class(static_cast<long>(cert.d)) * cert.d * a.count() * b.count();
            mpz_class rhs = mpz_class(4) * cert.lambda_squared * n * n;
            REQUIRE(lhs <= rhs);
        }
    }
}

TEST_CASE("dimacs-style counts") {
    auto g23 = build_polarity_graph(2, 3);
    // sum of degrees = 13*4 = 52 = 2*(nonloop) + loops, loops = 4
    REQUIRE(g23.graph.edge_count() == (52 - 4) / 2 + 4);
}
