#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/geometry.hpp"
#include "ramsey/product.hpp"
#include "ramsey/util.hpp"

namespace ramsey {

struct SearchLimits {
    double budget_seconds = 300.0;
};

struct SearchReport {
    enum class Result { free, witness_found, inconclusive };

    std::string property;
    Result result = Result::inconclusive;
    std::vector<int> witness;  // vertex tuple; empty unless witness_found
    std::uint64_t nodes = 0;
    double seconds = 0;
    bool witness_validated = false;

    bool is_free() const { return result == Result::free; }
    bool found() const { return result == Result::witness_found; }
    bool inconclusive() const { return result == Result::inconclusive; }
    static const char* result_name(Result r) {
        switch (r) {
            case Result::free: return "free";
            case Result::witness_found: return "witness-found";
            default: return "inconclusive";
        }
    }
};

// --- witness validators: direct probes against the raw definitions, kept
// --- independent of the search code paths.

inline bool validate_clique(const LoopyGraph& g, std::span<const int> verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) return false;
            if (!g.edge(verts[i], verts[j])) return false;
        }
    return true;
}

inline bool validate_independent_set(const LoopyGraph& g, std::span<const int> verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) return false;
            if (g.edge(verts[i], verts[j])) return false;
        }
    return true;
}

// tuple = (a_1, b_1, ..., a_s, b_s): a_i b_i in E(F) and a_i b_j in E(G) for i < j
inline bool validate_hs_tuple(const LoopyGraph& f, const LoopyGraph& g, std::span<const int> tuple) {
    if (tuple.size() % 2 != 0) return false;
    std::size_t s = tuple.size() / 2;
    for (std::size_t i = 0; i < s; ++i)
        if (!f.edge(tuple[2 * i], tuple[2 * i + 1])) return false;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (!g.edge(tuple[2 * i], tuple[2 * j + 1])) return false;
    return true;
}

inline bool validate_ts_tuple(const PairDigraph& d, std::span<const int> verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) return false;
            if (!d.arc(verts[i], verts[j])) return false;
        }
    return true;
}

namespace sdetail {

// Branch-and-bound clique kernel on a simple graph (loops must already be
// stripped). Vertices are pre-sorted by descending degree, ties by index.
class CliqueKernel {
public:
    CliqueKernel(const LoopyGraph& g, double budget)
        : n_(g.size()), adj_(n_), budget_(budget) {
        std::vector<int> order(n_);
        for (int v = 0; v < n_; ++v) order[v] = v;
        std::vector<int> deg(n_);
        for (int v = 0; v < n_; ++v) {
            deg[v] = g.degree(v) - (g.loop(v) ? 1 : 0);
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] > deg[b]; });
        orig_ = order;
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order[i]] = i;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && g.edge(u, v)) adj_.set(pos[u], pos[v]);
    }

    // complement-of-simple-graph kernel (for independence via cliques)
    static CliqueKernel complement_of(const LoopyGraph& g, double budget) {
        LoopyGraph c(g.size());
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (!g.edge(u, v)) c.add_edge(u, v);
        return CliqueKernel(c, budget);
    }

    // decision: find a clique of exactly s vertices
    bool find(int s, std::vector<int>& witness) {
        target_ = s;
        best_ = 0;
        maximize_ = false;
        stack_.clear();
        Bitset p(n_, true);
        bool found = dfs(p, 0);
        if (found) {
            witness.clear();
            for (int v : stack_) witness.push_back(orig_[v]);
        }
        return found;
    }

    // optimization: maximum clique size with witness
    int maximum(std::vector<int>& witness) {
        target_ = n_ + 1;
        best_ = 0;
        maximize_ = true;
        stack_.clear();
        best_stack_.clear();
        Bitset p(n_, true);
        dfs(p, 0);
        witness.clear();
        for (int v : best_stack_) witness.push_back(orig_[v]);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool timed_out() const { return timed_out_; }

private:
    bool dfs(Bitset& p, int depth) {
        ++nodes_;
        if ((nodes_ & 0xFFF) == 1 && clock_.seconds() > budget_) timed_out_ = true;
        if (timed_out_) return false;
        if (!maximize_ && depth == target_) return true;
        if (maximize_ && depth > best_) {
            best_ = depth;
            best_stack_ = stack_;
        }

        // greedy coloring of p; candidates emitted in color order
        std::vector<int> cand, color;
        color_sort(p, cand, color);
        for (int i = static_cast<int>(cand.size()) - 1; i >= 0; --i) {
            int bound = maximize_ ? best_ + 1 : target_;
            if (depth + color[i] < bound) return false;
            int v = cand[i];
            p.reset(v);
            stack_.push_back(v);
            if (!maximize_ && depth + 1 == target_) return true;
            Bitset p2 = p;
            p2.and_rows(adj_.row(v));
            if (dfs(p2, depth + 1)) return true;
            stack_.pop_back();
        }
        return false;
    }

    void color_sort(const Bitset& p, std::vector<int>& cand, std::vector<int>& color) const {
        std::vector<Bitset> classes;
        std::vector<std::vector<int>> members;
        p.for_each([&](int v) {
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (intersection_count(classes[c].data(), adj_.row(v), classes[c].words()) == 0) {
                    classes[c].set(v);
                    members[c].push_back(v);
                    return;
                }
            }
            classes.emplace_back(n_);
            classes.back().set(v);
            members.push_back({v});
        });
        cand.clear();
        color.clear();
        for (std::size_t c = 0; c < members.size(); ++c)
            for (int v : members[c]) {
                cand.push_back(v);
                color.push_back(static_cast<int>(c) + 1);
            }
    }

    int n_;
    BitMatrix adj_;
    std::vector<int> orig_;
    double budget_;
    Stopwatch clock_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    bool maximize_ = false;
    int target_ = 0;
    int best_ = 0;
    std::vector<int> stack_, best_stack_;
};

}  // namespace sdetail

// Exhaustive K_s search (loops ignored: a clique is s distinct pairwise
// adjacent vertices). Free / witness-found is a certificate either way;
// inconclusive only on timeout.
inline SearchReport find_clique(const LoopyGraph& g, int s, SearchLimits limits = {}) {
    if (s < 2) throw std::invalid_argument("find_clique needs s >= 2");
    SearchReport rep;
    rep.property = "K" + std::to_string(s) + "-free";
    Stopwatch clock;
    sdetail::CliqueKernel kernel(g, limits.budget_seconds);
    std::vector<int> witness;
    bool found = kernel.find(s, witness);
    rep.nodes = kernel.nodes();
    rep.seconds = clock.seconds();
    if (found) {
        rep.result = SearchReport::Result::witness_found;
        rep.witness = witness;
        rep.witness_validated = validate_clique(g, witness);
    } else if (kernel.timed_out()) {
        rep.result = SearchReport::Result::inconclusive;
    } else {
        rep.result = SearchReport::Result::free;
    }
    return rep;
}

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;
    SearchReport report;
};

// Exact independence number via maximum clique on the complement. Loops are
// ignored: a vertex carrying a loop may be part of an independent set, only
// edges between distinct vertices matter.
inline IndependenceResult independence_number(const LoopyGraph& g, SearchLimits limits = {}) {
    if (g.size() > 200) throw std::invalid_argument("independence_number capped at 200 vertices");
    IndependenceResult out;
    Stopwatch clock;
    auto kernel = sdetail::CliqueKernel::complement_of(g, limits.budget_seconds);
    out.alpha = kernel.maximum(out.witness);
    out.report.property = "independence-number";
    out.report.nodes = kernel.nodes();
    out.report.seconds = clock.seconds();
    if (kernel.timed_out()) {
        out.report.result = SearchReport::Result::inconclusive;
    } else {
        out.report.result = SearchReport::Result::witness_found;
        out.report.witness = out.witness;
        out.report.witness_validated = validate_independent_set(g, out.witness);
    }
    return out;
}

// Exhaustive search for an H_s tuple (a_1, b_1, ..., a_s, b_s) with
// a_i b_i in E(F) and a_i b_j in E(G) for i < j. Vertices may repeat and
// loops count as edges. Depth-first over i: b_i ranges over the running
// intersection of the N_G(a_j), then a_i over N_F(b_i).
inline SearchReport find_hs_witness(const LoopyGraph& f, const LoopyGraph& g, int s,
                                    SearchLimits limits = {}) {
    if (f.size() != g.size()) throw std::invalid_argument("H_s search needs a shared vertex set");
    if (s < 1) throw std::invalid_argument("find_hs_witness needs s >= 1");
    SearchReport rep;
    rep.property = "H" + std::to_string(s) + "-free";
    Stopwatch clock;
    int n = f.size();
    std::vector<int> tuple(2 * s, -1);
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::function<bool(int, const Bitset&)> rec = [&](int i, const Bitset& cand) -> bool {
        for (int b = cand.next(0); b >= 0; b = cand.next(b + 1)) {
            for (int a = next_bit(f.row(b), n, 0); a >= 0; a = next_bit(f.row(b), n, a + 1)) {
                ++nodes;
                if ((nodes & 0xFFF) == 1 && clock.seconds() > limits.budget_seconds) timed_out = true;
                if (timed_out) return false;
                tuple[2 * (i - 1)] = a;
                tuple[2 * (i - 1) + 1] = b;
                if (i == s) return true;
                Bitset next = cand;
                next.and_rows(g.row(a));
                if (next.any() && rec(i + 1, next)) return true;
            }
        }
        return false;
    };

    Bitset all(n, true);
    bool found = n > 0 && rec(1, all);
    rep.nodes = nodes;
    rep.seconds = clock.seconds();
    if (found) {
        rep.result = SearchReport::Result::witness_found;
        rep.witness = tuple;
        rep.witness_validated = validate_hs_tuple(f, g, tuple);
    } else if (timed_out) {
        rep.result = SearchReport::Result::inconclusive;
    } else {
        rep.result = SearchReport::Result::free;
    }
    return rep;
}

// Exhaustive search for a transitive tournament on s distinct vertices:
// v_1, ..., v_s with (v_i, v_j) in A(D) for all i < j. DFS with forward
// neighborhood intersections; candidate sets shrink monotonically.
inline SearchReport find_ts_witness(const PairDigraph& d, int s, SearchLimits limits = {}) {
    if (s < 2) throw std::invalid_argument("find_ts_witness needs s >= 2");
    SearchReport rep;
    rep.property = "T" + std::to_string(s) + "-free";
    Stopwatch clock;
    BitMatrix arcs = materialize_arcs(d);
    int n = d.size();
    std::vector<int> stack;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::function<bool(const Bitset&, int)> rec = [&](const Bitset& cand, int depth) -> bool {
        if (depth == s) return true;
        if (depth + cand.count() < s) return false;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            ++nodes;
            if ((nodes & 0xFFF) == 1 && clock.seconds() > limits.budget_seconds) timed_out = true;
            if (timed_out) return false;
            stack.push_back(v);
            Bitset next = cand;
            next.and_rows(arcs.row(v));
            next.reset(v);
            if (rec(next, depth + 1)) return true;
            stack.pop_back();
        }
        return false;
    };

    Bitset all(n, true);
    bool found = n > 0 && rec(all, 0);
    rep.nodes = nodes;
    rep.seconds = clock.seconds();
    if (found) {
        rep.result = SearchReport::Result::witness_found;
        rep.witness = stack;
        rep.witness_validated = validate_ts_tuple(d, stack);
    } else if (timed_out) {
        rep.result = SearchReport::Result::inconclusive;
    } else {
        rep.result = SearchReport::Result::free;
    }
    return rep;
}

// Enumerate independent sets of size exactly k (vertices ascending). Stops at
// cap and reports truncation; used by the pipeline's deletion loop.
struct KSetEnumeration {
    std::vector<std::vector<int>> sets;
    bool truncated = false;
};

inline KSetEnumeration enumerate_independent_ksets(const LoopyGraph& g, int k,
                                                   std::size_t cap = 500000) {
    KSetEnumeration out;
    if (k == 0) {
        out.sets.push_back({});
        return out;
    }
    int n = g.size();
    std::vector<int> cur;
    std::function<void(int, const Bitset&)> rec = [&](int depth, const Bitset& cand) {
        if (out.truncated) return;
        if (depth == k) {
            if (out.sets.size() >= cap) {
                out.truncated = true;
                return;
            }
            out.sets.push_back(cur);
            return;
        }
        if (depth + cand.count() < k) return;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            cur.push_back(v);
            Bitset next(n);
            for (int w = cand.next(v + 1); w >= 0; w = cand.next(w + 1))
                if (!g.edge(v, w)) next.set(w);
            rec(depth + 1, next);
            cur.pop_back();
            if (out.truncated) return;
        }
    };
    Bitset all(n, true);
    rec(0, all);
    return out;
}

}  // namespace ramsey
