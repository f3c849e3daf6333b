#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramsey/counting.hpp"
#include "ramsey/freeness.hpp"
#include "ramsey/product.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// Random-permutation orientation: edge {u, v} for every arc (u, v) of D going
// forward under pi. The output is loopless and K_s-free whenever D is
// T_s-free; pi is kept for auditability.
struct OrientedGraph {
    LoopyGraph graph;
    std::vector<int> pi;  // pi[v] = position of v in the permutation
    std::uint64_t seed = 0;
};

inline OrientedGraph orient(const PairDigraph& d, std::uint64_t seed) {
    int n = d.size();
    if (n > 8192) throw std::invalid_argument("orient capped at 8192 digraph vertices");
    Xoshiro256ss rng(seed);
    OrientedGraph out{LoopyGraph(n), random_permutation(n, rng), seed};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool fwd = (d.arc(u, v) && out.pi[u] < out.pi[v]) ||
                       (d.arc(v, u) && out.pi[v] < out.pi[u]);
            if (fwd) out.graph.add_edge(u, v);
        }
    return out;
}

// p = min(1, i_k^(-1/k)) computed in log space; i_k = 0 is flagged separately
// (the caller should keep every vertex).
struct ChosenP {
    double p = 1.0;
    bool ik_zero = false;
};

inline ChosenP choose_p(const mpz_class& ik, int k) {
    if (ik < 0 || k < 1) throw std::invalid_argument("choose_p needs i_k >= 0, k >= 1");
    if (ik == 0) return {1.0, true};
    double log2p = -log2_mpz(ik) / k;
    return {std::min(1.0, std::exp2(log2p)), false};
}

// A constructed K_s-free graph together with machine-checked evidence. Fully
// certified means: clique search exhaustively found no K_s, the independence
// number was computed exactly and is < k, and both witnesses re-validated.
// The recorded arithmetic implication is r(s, k) > n(graph).
struct RamseyWitness {
    LoopyGraph graph;
    int s = 0, k = 0;
    std::uint64_t seed = 0;
    std::vector<int> kept;     // original vertex ids surviving in graph
    std::vector<int> deleted;  // deletion order, original ids
    SearchReport clique_report;
    IndependenceResult independence;
    bool fully_certified = false;
    long long implied_bound_n = 0;  // r(s, k) > implied_bound_n
};

// Keep each vertex of gamma independently with probability p, then repeatedly
// delete the vertex covering the most surviving independent k-sets until none
// remain, and certify the result exactly. Up to `attempts` tries; the best
// certified witness (most surviving vertices) wins.
inline RamseyWitness sample_and_prune(const LoopyGraph& gamma, int s, int k, double p,
                                      std::uint64_t seed, int attempts = 1,
                                      SearchLimits limits = {}) {
    if (p < 0 || p > 1) throw std::invalid_argument("sample probability out of range");
    if (attempts < 1) throw std::invalid_argument("attempts must be >= 1");
    if (k < 1) throw std::invalid_argument("independence target k must be >= 1");
    std::optional<RamseyWitness> best;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Xoshiro256ss rng(derive_stream(seed, attempt));
        std::vector<int> kept;
        for (int v = 0; v < gamma.size(); ++v)
            if (bernoulli(rng, p)) kept.push_back(v);
        if (kept.size() > 200)
            throw std::invalid_argument("sampled graph exceeds the 200-vertex exact cap; lower p");

        std::vector<int> deleted;
        LoopyGraph cur = induced_subgraph(gamma, kept);
        while (true) {
            auto ksets = enumerate_independent_ksets(cur, k);
            if (ksets.sets.empty()) break;
            // cover counts over the enumerated sets; ties to the lowest index
            std::vector<int> cover(cur.size(), 0);
            for (const auto& set : ksets.sets)
                for (int v : set) ++cover[v];
            int victim = 0;
            for (int v = 1; v < cur.size(); ++v)
                if (cover[v] > cover[victim]) victim = v;
            deleted.push_back(kept[victim]);
            kept.erase(kept.begin() + victim);
            cur = induced_subgraph(gamma, kept);
        }

        RamseyWitness w;
        w.graph = cur;
        w.s = s;
        w.k = k;
        w.seed = seed;
        w.kept = kept;
        w.deleted = deleted;
        w.clique_report = find_clique(cur, s, limits);
        if (cur.size() > 0) {
            w.independence = independence_number(cur, limits);
            w.fully_certified = w.clique_report.is_free() &&
                                !w.independence.report.inconclusive() &&
                                w.independence.alpha < k;
        } else {
            w.independence.alpha = 0;
            w.independence.report.property = "independence-number";
            w.independence.report.result = SearchReport::Result::witness_found;
            w.independence.report.witness_validated = true;
            w.fully_certified = w.clique_report.is_free();
        }
        w.implied_bound_n = cur.size();
        if (w.fully_certified && (!best || w.graph.size() > best->graph.size())) best = std::move(w);
    }
    if (!best) throw std::runtime_error("no attempt produced a certified witness");
    if (best->graph.size() == 0 && p > 0)
        throw std::runtime_error("all attempts produced empty graphs");
    return *best;
}

// Random-homomorphism multicoloring: phi_c : [n] -> V(D) uniform and
// independent for c in [ell-1] (stream c of the seed); edge ij gets the
// minimum c with (phi_c(i), phi_c(j)) in A(D), else color ell.
struct MultiColoring {
    int n = 0, ell = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> phi;  // (ell-1) maps [n] -> V(D)
    std::vector<std::uint8_t> color;    // color[i*n+j], 1-based colors, i != j

    int edge_color(int i, int j) const { return color[static_cast<std::size_t>(i) * n + j]; }

    LoopyGraph color_class_graph(int c) const {
        LoopyGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge_color(i, j) == c) g.add_edge(i, j);
        return g;
    }
};

inline MultiColoring multicolor_build(const PairDigraph& d, int ell, int n, std::uint64_t seed) {
    if (ell < 3) throw std::invalid_argument("multicolor_build needs ell >= 3");
    if (d.size() == 0) throw std::invalid_argument("multicolor_build needs a nonempty digraph");
    if (!d.loopless) throw std::invalid_argument("multicolor_build requires a loopless digraph");
    if (n < 1) throw std::invalid_argument("multicolor_build needs n >= 1");
    MultiColoring mc;
    mc.n = n;
    mc.ell = ell;
    mc.seed = seed;
    mc.phi.resize(ell - 1);
    for (int c = 0; c < ell - 1; ++c) {
        Xoshiro256ss rng(derive_stream(seed, c + 1));
        mc.phi[c].resize(n);
        for (int i = 0; i < n; ++i)
            mc.phi[c][i] = static_cast<int>(uniform_below(rng, d.size()));
    }
    mc.color.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int col = ell;
            for (int c = 0; c < ell - 1; ++c)
                if (d.arc(mc.phi[c][i], mc.phi[c][j])) {
                    col = c + 1;
                    break;
                }
            mc.color[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(col);
            mc.color[static_cast<std::size_t>(j) * n + i] = static_cast<std::uint8_t>(col);
        }
    return mc;
}

// Exact expectation of the number of color-ell monochromatic K_s:
// C(n, s) (fwi_s(D) / N^s)^(ell-1); the ell-1 maps are independent and
// uniform, so this is an equality, not just an upper bound.
inline double multicolor_expected(const PairDigraph& d, int ell, int n, int s,
                                  CountLimits limits = {}) {
    if (n < s) return 0.0;
    CountResult fwi = fwi_count(d, s, limits);
    if (fwi.inconclusive) throw std::runtime_error("fwi oracle inconclusive");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    mpz_class nspow;
    mpz_ui_pow_ui(nspow.get_mpz_t(), static_cast<unsigned long>(d.size()),
                  static_cast<unsigned long>(s));
    mpq_class ratio(fwi.exact, nspow);
    ratio.canonicalize();
    mpq_class acc = binom;
    for (int c = 0; c < ell - 1; ++c) acc *= ratio;
    return acc.get_d();
}

}  // namespace ramsey
