#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramsey/counting.hpp"
#include "ramsey/product.hpp"

namespace ramsey {

// Evaluation of a named closed-form bound: log2 value, exact integer where
// the expression is integral, and a flag for every hypothesis of the cited
// statement the inputs fail (flagged values are still computed).
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double log2_value = 0;
    bool has_exact = false;
    mpz_class exact;
    std::vector<std::string> flags;
};

// r(s, k) <= C(k+s-2, s-1)
inline BoundReport erdos_szekeres_upper(long long s, long long k) {
    if (s < 1 || k < 1) throw std::invalid_argument("erdos_szekeres_upper needs s, k >= 1");
    BoundReport r;
    r.name = "erdos-szekeres";
    r.params = {{"s", static_cast<double>(s)}, {"k", static_cast<double>(k)}};
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k + s - 2),
                 static_cast<unsigned long>(s - 1));
    r.has_exact = true;
    r.exact = b;
    r.log2_value = log2_mpz(b);
    return r;
}

struct BoundParams {
    double s = 0;
    double k = 0;
    double delta = 0;
    double C = 0;
    double a = 0;
    double ell = 0;
    double c_s = 1.0;
    bool c_s_supplied = false;
};

// Multiplexed evaluator for the closed-form lower bounds:
//   thm-main:       c_s k^(s-2) / (ln k)^(2s-6)
//   thm-general:    (k/s)^((1-delta) s)
//   thm-kck:        (2^(1 - 1/(2C)))^s
//   thm-close:      (s/e) 2^((s+a-1)/2 - a^2/(2s))
//   thm-multicolor: 2^((ell-1) s / 2)
//   spencer-close:  (s/e) 2^((s+1)/2 + a/4)       (O(a^2/s) term reported as a caveat)
inline BoundReport lower_bound_formula(const std::string& name, const BoundParams& p) {
    BoundReport r;
    r.name = name;
    auto flag_if = [&](bool bad, const std::string& msg) {
        if (bad) r.flags.push_back(msg);
    };
    const double log2e = std::log2(std::exp(1.0));
    if (name == "thm-main") {
        if (p.s <= 0 || p.k < 2) throw std::invalid_argument("thm-main needs s > 0, k >= 2");
        r.params = {{"s", p.s}, {"k", p.k}, {"c_s", p.c_s}};
        flag_if(!p.c_s_supplied, "c_s unspecified by the statement; using caller default 1 (non-paper constant)");
        flag_if(p.s < 4, "hypothesis s >= 4 violated");
        r.log2_value = std::log2(p.c_s) + (p.s - 2) * std::log2(p.k) -
                       (2 * p.s - 6) * std::log2(std::log(p.k));
    } else if (name == "thm-general") {
        if (p.s <= 0 || p.k <= 0) throw std::invalid_argument("thm-general needs s, k > 0");
        r.params = {{"s", p.s}, {"k", p.k}, {"delta", p.delta}};
        flag_if(p.delta <= 0 || p.delta >= 1, "hypothesis 0 < delta < 1 violated");
        flag_if(p.k < p.s, "hypothesis k >= L s violated (k < s)");
        r.log2_value = (1 - p.delta) * p.s * std::log2(p.k / p.s);
    } else if (name == "thm-kck") {
        if (p.s <= 0) throw std::invalid_argument("thm-kck needs s > 0");
        r.params = {{"s", p.s}, {"C", p.C}};
        flag_if(p.C <= 1, "hypothesis C > 1 violated");
        r.log2_value = p.s * (1 - 1 / (2 * p.C));
    } else if (name == "thm-close") {
        if (p.s <= 0) throw std::invalid_argument("thm-close needs s > 0");
        r.params = {{"s", p.s}, {"a", p.a}};
        flag_if(p.a < 0, "hypothesis a >= 0 violated");
        flag_if(p.a >= p.s, "asymptotic hypothesis a = o(s) clearly violated (a >= s)");
        r.log2_value = std::log2(p.s) - log2e + (p.s + p.a - 1) / 2 - p.a * p.a / (2 * p.s);
        r.flags.push_back("(1+o(1)) factor omitted");
    } else if (name == "thm-multicolor") {
        if (p.s <= 0 || p.ell < 2) throw std::invalid_argument("thm-multicolor needs s > 0, ell >= 2");
        r.params = {{"s", p.s}, {"ell", p.ell}};
        r.log2_value = (p.ell - 1) * p.s / 2;
        double e = (p.ell - 1) * p.s;
        if (std::floor(e) == e && std::fmod(e, 2.0) == 0.0 && e >= 0) {
            r.has_exact = true;
            r.exact = mpz_class(1) << static_cast<unsigned long>(e / 2);
        }
        r.flags.push_back("Omega(.) constant omitted");
    } else if (name == "spencer-close") {
        if (p.s <= 0) throw std::invalid_argument("spencer-close needs s > 0");
        r.params = {{"s", p.s}, {"a", p.a}};
        flag_if(p.a < 0, "hypothesis a >= 0 violated");
        r.log2_value = std::log2(p.s) - log2e + (p.s + 1) / 2 + p.a / 4;
        r.flags.push_back("O(a^2/s) exponent term omitted");
        r.flags.push_back("(1+o(1)) factor omitted");
    } else {
        throw std::invalid_argument("unknown bound name: " + name);
    }
    return r;
}

// Both branches of the conditional theorem: r(s,k) >= (1/50) k eta^((w-k)/k) - 1
// for w <= k <= eta d(F) n, and r(s,k) >= k/(100 eta) - 1 when additionally
// k >= 100 n (ln n)^2 / d(G). Hypotheses are evaluated and flagged, values
// reported regardless.
struct ConditionalBoundReport {
    double eta = 0;
    double w = 0;
    double branch1 = 0;
    double branch2 = 0;
    double k_lo = 0;  // max(w, 100 n (ln n)^2 / d(G))
    double k_hi = 0;  // eta d(F) n
    bool interval_empty = false;
    bool k_in_interval = false;
    std::vector<std::string> flags;
};

inline ConditionalBoundReport thm28_eval(const PairSystem& pair, double k) {
    if (!(k > 0)) throw std::invalid_argument("thm28_eval needs k > 0");
    ConditionalBoundReport r;
    r.eta = pair.eta.value();
    r.w = pair.w;
    double n = pair.n;
    double dG = pair.cert_g.d;
    double dfn = static_cast<double>(pair.product_vertices());
    double logn = std::log(n);
    r.k_lo = std::max(pair.w, 100.0 * n * logn * logn / dG);
    r.k_hi = r.eta * dfn;
    r.interval_empty = r.k_lo > r.k_hi;
    r.k_in_interval = !(k < r.k_lo) && !(k > r.k_hi);
    if (r.interval_empty) r.flags.push_back("admissible k-interval is empty");
    if (k < pair.w) r.flags.push_back("hypothesis k >= w violated");
    if (k > r.k_hi) r.flags.push_back("hypothesis k <= eta d(F) n violated");

    double expo = (pair.w - k) / k;
    double eta_pow;
    if (pair.eta.is_zero()) {
        r.flags.push_back("eta = 0: power term degenerate");
        eta_pow = expo < 0 ? std::numeric_limits<double>::infinity() : (expo > 0 ? 0.0 : 1.0);
    } else {
        eta_pow = expo == 0.0 ? 1.0 : std::exp2(expo * pair.eta.log2_value());
    }
    r.branch1 = k / 50.0 * eta_pow - 1.0;
    r.branch2 = pair.eta.is_zero() ? std::numeric_limits<double>::infinity()
                                   : k / (100.0 * r.eta) - 1.0;
    return r;
}

// Unique p in (0, 1/2] solving C = ln(p) / ln(1-p); the ratio is strictly
// decreasing in p, from +inf at 0+ down to 1 at 1/2.
inline double pc_solve(double C) {
    if (C < 1) throw std::invalid_argument("pc_solve needs C >= 1");
    if (C == 1) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        double val = std::log(mid) / std::log1p(-mid);  // both logs negative
        if (val > C)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

// Optimal local-lemma parameters near the diagonal: solve
// ((1+delta)/(1-delta))^(s+1) (1+delta)^a = 2^a for delta in [0, 1), then
// p = (1-delta)/2 and the two n-bound expressions agree at the solution.
// residual is relative to 2^a.
struct LLLSolution {
    double s = 0, a = 0;
    double delta = 0;
    double p = 0.5;
    double log2_n_bound = 0;
    double residual = 0;  // |lhs/2^a - 1|
    std::vector<std::string> flags;
};

inline LLLSolution spencer_lll(double s, double a) {
    if (s < 3) throw std::invalid_argument("spencer_lll needs s >= 3");
    if (a < 0) throw std::invalid_argument("spencer_lll needs a >= 0");
    LLLSolution sol;
    sol.s = s;
    sol.a = a;
    const double log2e = std::log2(std::exp(1.0));
    auto g = [&](double delta) {
        // ln(lhs / 2^a)
        return (s + 1) * (std::log1p(delta) - std::log1p(-delta)) + a * std::log1p(delta) -
               a * std::log(2.0);
    };
    if (a == 0) {
        sol.delta = 0;
    } else {
        double lo = 0.0, hi = 1.0 - 1e-12;
        for (int it = 0; it < 200; ++it) {
            double mid = (lo + hi) / 2;
            if (g(mid) < 0)
                lo = mid;
            else
                hi = mid;
        }
        sol.delta = (lo + hi) / 2;
    }
    sol.p = (1.0 - sol.delta) / 2.0;
    double k = s + a;
    double b1 = std::log2(s) - log2e + (s + 1) / 2 * std::log2(1.0 / sol.p);
    double b2 = std::log2(s) - log2e + (k + 1) / 2 * std::log2(1.0 / (1.0 - sol.p));
    sol.log2_n_bound = std::min(b1, b2);
    sol.residual = std::fabs(std::expm1(g(sol.delta)));
    sol.flags.push_back("(1+o(1)) factors omitted from the n-bounds");
    return sol;
}

}  // namespace ramsey
