#include <catch2/catch.hpp>

#include <algorithm>
#include <cmath>

#include "ramsey/bounds.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

namespace {

// digraph with a single arc between two distinct vertices
PairDigraph single_arc_digraph() {
    LoopyGraph f(2), g(2);
    f.add_edge(0, 1);  // verts (0,1) and (1,0)
    g.add_edge(0, 0);  // arc (0,1) -> (1,0) only
    auto d = build_pair_digraph(f, g);
    REQUIRE(d.size() == 2);
    REQUIRE(d.arc(0, 1));
    REQUIRE_FALSE(d.arc(1, 0));
    REQUIRE_FALSE(d.arc(0, 0));
    REQUIRE_FALSE(d.arc(1, 1));
    return d;
}

PairDigraph arcless_digraph_n3() {
    LoopyGraph f(3), g(3);
    for (int u = 0; u < 3; ++u)
        for (int v = u; v < 3; ++v) f.add_edge(u, v);
    return build_pair_digraph(f, g);
}

}  // namespace

TEST_CASE("orientation of an arcless digraph is empty for every seed") {
    auto d = arcless_digraph_n3();
    for (std::uint64_t seed : {0ull, 1ull, 42ull, 999ull}) {
        auto og = orient(d, seed);
        REQUIRE(og.graph.edge_count() == 0);
    }
}

TEST_CASE("single arc becomes an edge about half the time") {
    auto d = single_arc_digraph();
    int present = 0;
    const int trials = 10000;
    for (int seed = 0; seed < trials; ++seed) {
        auto og = orient(d, static_cast<std::uint64_t>(seed));
        if (og.graph.edge(0, 1)) ++present;
    }
    // 3 sigma around 1/2: sigma = sqrt(trials)/2
    double sigma = std::sqrt(trials) / 2;
    REQUIRE(std::fabs(present - trials / 2.0) <= 3 * sigma);
}

TEST_CASE("orientation is K_s-free and independent sets are forward independent") {
    auto d = build_f2_digraph(4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto og = orient(d, seed);
        REQUIRE(find_clique(og.graph, 4).is_free());
        auto en = enumerate_independent_ksets(og.graph, 4);
        REQUIRE_FALSE(en.truncated);
        for (auto set : en.sets) {
            std::sort(set.begin(), set.end(),
                      [&](int a, int b) { return og.pi[a] < og.pi[b]; });
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    REQUIRE_FALSE(d.arc(set[i], set[j]));
        }
    }
}

TEST_CASE("pi is stored and is a permutation") {
    auto d = build_f2_digraph(4);
    auto og = orient(d, 7);
    std::vector<int> sorted = og.pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 28; ++i) REQUIRE(sorted[i] == i);
    // same seed, same permutation
    REQUIRE(orient(d, 7).pi == og.pi);
    REQUIRE(orient(d, 8).pi != og.pi);
}

TEST_CASE("choose_p") {
    REQUIRE(choose_p(mpz_class(1), 4).p == 1.0);
    REQUIRE(choose_p(mpz_class(16), 4).p == Approx(0.5));
    auto cp = choose_p(mpz_class(393216), 4);
    REQUIRE(cp.p == Approx(std::pow(393216.0, -0.25)).epsilon(1e-9));
    REQUIRE_FALSE(cp.ik_zero);
    REQUIRE(choose_p(mpz_class(0), 4).ik_zero);
}

TEST_CASE("sample_and_prune with p = 0 returns the vacuous witness") {
    LoopyGraph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    auto w = sample_and_prune(c5, 3, 2, 0.0, 11);
    REQUIRE(w.graph.size() == 0);
    REQUIRE(w.fully_certified);
    REQUIRE(w.implied_bound_n == 0);
}

TEST_CASE("sample_and_prune with p = 1 on a graph with alpha < k keeps everything") {
    LoopyGraph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    // alpha(C_5) = 2 < 3 and C_5 is triangle-free
    auto w = sample_and_prune(c5, 3, 3, 1.0, 5);
    REQUIRE(w.graph.size() == 5);
    REQUIRE(w.deleted.empty());
    REQUIRE(w.fully_certified);
    REQUIRE(w.independence.alpha == 2);
    REQUIRE(w.clique_report.is_free());
}

TEST_CASE("sample_and_prune deletes until no independent k-set survives") {
    LoopyGraph empty(6);
    auto w = sample_and_prune(empty, 3, 2, 1.0, 0);
    // independent 2-sets are all pairs; only a single vertex can survive
    REQUIRE(w.graph.size() == 1);
    REQUIRE(w.deleted.size() == 5);
    REQUIRE(w.fully_certified);
    REQUIRE(w.independence.alpha == 1);
}

TEST_CASE("witness bound never exceeds the closed-form upper bound") {
    auto d = build_f2_digraph(4);
    auto og = orient(d, 3);
    auto ind = independence_number(og.graph);
    int k = ind.alpha + 1;
    auto w = sample_and_prune(og.graph, 4, k, 1.0, 3);
    REQUIRE(w.fully_certified);
    // r(4, k) > n  together with  r(4, k) <= C(k+2, 3)
    auto es = erdos_szekeres_upper(4, k);
    REQUIRE(mpz_class(static_cast<long>(w.implied_bound_n) + 1) <= es.exact);
}

TEST_CASE("multicolor build basics") {
    auto d = build_f2_digraph(4);
    auto mc = multicolor_build(d, 3, 20, 42);
    REQUIRE(mc.phi.size() == 2);
    for (auto& phi : mc.phi)
        for (int x : phi) {
            REQUIRE(x >= 0);
            REQUIRE(x < 28);
        }
    // colors partition the edges of K_n
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j) {
            int c = mc.edge_color(i, j);
            REQUIRE(c >= 1);
            REQUIRE(c <= 3);
        }
    // streams are reproducible
    auto mc2 = multicolor_build(d, 3, 20, 42);
    REQUIRE(mc2.phi == mc.phi);
    REQUIRE(mc2.color == mc.color);
}

TEST_CASE("multicolor rejects loops and bad parameters") {
    LoopyGraph single(1);
    single.add_edge(0, 0);
    auto loopy = build_pair_digraph(single, single);
    REQUIRE_THROWS_AS(multicolor_build(loopy, 3, 5, 0), std::invalid_argument);
    auto d = build_f2_digraph(4);
    REQUIRE_THROWS_AS(multicolor_build(d, 2, 5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(multicolor_build(d, 3, 0, 0), std::invalid_argument);
}

TEST_CASE("arcless digraph colors every edge with the last color") {
    auto d = arcless_digraph_n3();
    auto mc = multicolor_build(d, 3, 6, 9);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) REQUIRE(mc.edge_color(i, j) == 3);
    // and the expected count formula degenerates to C(n, s)
    REQUIRE(multicolor_expected(d, 3, 6, 4) == Approx(15.0));  // C(6,4)
}

TEST_CASE("single-vertex coloring has no edges") {
    auto d = build_f2_digraph(4);
    auto mc = multicolor_build(d, 3, 1, 0);
    REQUIRE(mc.n == 1);
}

TEST_CASE("colors below ell contain no monochromatic K_s") {
    auto d = build_f2_digraph(4);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto mc = multicolor_build(d, 3, 20, seed);
        for (int c = 1; c <= 2; ++c)
            REQUIRE(find_clique(mc.color_class_graph(c), 4).is_free());
    }
}

TEST_CASE("multicolor expected value formula") {
    auto d = build_f2_digraph(4);
    // C(20,4) (fwi_4 / 28^4)^2 with fwi_4 = 34048
    double expect = 4845.0 * std::pow(34048.0 / 614656.0, 2.0);
    REQUIRE(multicolor_expected(d, 3, 20, 4) == Approx(expect).epsilon(1e-12));
    REQUIRE(multicolor_expected(d, 3, 3, 4) == 0.0);  // n < s
    REQUIRE_THROWS_AS(multicolor_expected(d, 3, 20, 4, CountLimits{5}), std::runtime_error);
}
