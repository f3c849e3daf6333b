// Command-line surface over the construction and certification library.
// Every run emits a JSON certificate (to --out, or stdout). Exit codes:
//   0  success, certificate written
//   2  a re-validated witness contradicts a claimed freeness property
//   3  a search or counting kernel was inconclusive (budget exhausted)

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/freeness.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/pipeline.hpp"
#include "ramsey/product.hpp"

using namespace ramsey;

namespace {

struct Common {
    std::string out;
    std::string format = "dimacs";
    std::uint64_t seed = 0;
    double budget_seconds = 300.0;
    int threads = 1;
    bool deterministic = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "output path (certificate or primary artifact)");
    cmd->add_option("--seed", c.seed, "random seed");
    cmd->add_option("--budget-seconds", c.budget_seconds, "search time budget");
    cmd->add_option("--threads", c.threads, "worker threads for verification kernels");
    cmd->add_flag("--deterministic", c.deterministic, "omit timings for byte-stable output");
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

void emit(const Certificate& cert, const Common& c, const std::string& suffix = "") {
    if (c.out.empty()) {
        std::cout << cert.dump();
    } else {
        write_file(suffix.empty() ? c.out : c.out + suffix, cert.dump());
    }
}

// Pair source shared by the product/orientation/counting commands: either the
// polarity pair (complement(G(t,q)), G(t,q)) or the characteristic-2 pair.
struct PairSpec {
    int t = 0;
    std::uint32_t q = 0;
    int f2_s = 0;  // nonzero selects the F_2 construction

    bool f2() const { return f2_s > 0; }
    // the s for which the construction claims H_s/T_s-freeness
    int claimed_s() const { return f2() ? f2_s : t + 2; }

    PairDigraph build(json* inputs) const {
        if (f2()) {
            if (inputs) {
                (*inputs)["construction"] = "f2";
                (*inputs)["s"] = f2_s;
            }
            return build_f2_digraph(f2_s);
        }
        if (t == 0 && q == 0)
            throw std::invalid_argument("specify a construction: --t/--q or --f2");
        auto pg = build_polarity_graph(t, q);
        if (inputs) {
            (*inputs)["construction"] = "polarity-pair";
            (*inputs)["t"] = t;
            (*inputs)["q"] = q;
            (*inputs)["field"] = Certificate::field_descriptor(pg.field);
        }
        return build_pair_digraph(complement(pg.graph), pg.graph);
    }
};

void add_pair_options(CLI::App* cmd, PairSpec& p) {
    cmd->add_option("--t", p.t, "projective dimension t");
    cmd->add_option("--q", p.q, "field order q (prime power)");
    cmd->add_option("--f2", p.f2_s, "use the F_2 construction with this s");
}

int run_polarity(const Common& c, int t, std::uint32_t q, const std::string& command) {
    auto pg = build_polarity_graph(t, q);
    auto cert = Certificate(command, c.deterministic);
    cert.inputs()["t"] = t;
    cert.inputs()["q"] = q;
    cert.inputs()["field"] = Certificate::field_descriptor(pg.field);
    Stopwatch sw;
    auto spec = certify_spectrum(pg.graph, c.threads);
    cert.set_timing("certify", sw.seconds());
    cert.results()["n"] = pg.graph.size();
    cert.results()["loops"] = pg.graph.loop_count();
    cert.results()["spectral"] = Certificate::spectral(spec);
    if (!c.out.empty()) {
        std::string comment = "polarity graph t=" + std::to_string(t) + " q=" + std::to_string(q);
        if (c.format == "edges")
            write_file(c.out, to_edge_list(pg.graph));
        else
            write_file(c.out, to_dimacs(pg.graph, comment));
        write_file(c.out + ".labels", point_labels(pg));
        write_file(c.out + ".cert.json", cert.dump());
    } else {
        std::cout << cert.dump();
    }
    return 0;
}

int run_certify(const Common& c, int t, std::uint32_t q, bool use_complement,
                const std::string& command) {
    auto pg = build_polarity_graph(t, q);
    LoopyGraph g = use_complement ? complement(pg.graph) : pg.graph;
    auto cert = Certificate(command, c.deterministic);
    cert.inputs()["t"] = t;
    cert.inputs()["q"] = q;
    cert.inputs()["complement"] = use_complement;
    Stopwatch sw;
    auto spec = certify_spectrum(g, c.threads);
    cert.set_timing("certify", sw.seconds());
    cert.results()["spectral"] = Certificate::spectral(spec);
    emit(cert, c);
    return spec.verified ? 0 : 2;
}

int run_check_hs(const Common& c, int t, std::uint32_t q, int s, const std::string& command) {
    auto pg = build_polarity_graph(t, q);
    auto f = complement(pg.graph);
    auto cert = Certificate(command, c.deterministic);
    cert.inputs()["t"] = t;
    cert.inputs()["q"] = q;
    cert.inputs()["s"] = s;
    cert.inputs()["pair"] = "(complement(G(t,q)), G(t,q))";
    auto rep = find_hs_witness(f, pg.graph, s, {c.budget_seconds});
    cert.results()["search"] = cert.search_report(rep);
    bool claimed = s >= t + 2;
    cert.results()["freeness-claimed"] = claimed;
    emit(cert, c);
    return exit_code_for(rep, claimed);
}

int run_product(const Common& c, const PairSpec& p, const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    auto d = p.build(&cert.inputs());
    cert.results()["vertices"] = d.size();
    cert.results()["loopless"] = d.loopless;
    if (p.f2()) {
        long long stated = f2_stated_vertex_count(p.f2_s);
        cert.results()["stated-vertex-formula"] = stated;
        if (stated != d.size())
            cert.add_discrepancy(
                "stated vertex formula 2^(2s-3) - 2^(s-1) - 2^(s-2) + 1 = " + std::to_string(stated) +
                " counts adjacent ordered pairs; the defined vertex set has " +
                std::to_string(d.size()) + " elements");
    }
    if (!c.out.empty()) {
        write_file(c.out, to_arc_list(d));
        write_file(c.out + ".vertices", pair_vertex_map(d));
        write_file(c.out + ".cert.json", cert.dump());
    } else {
        std::cout << cert.dump();
    }
    return 0;
}

int run_check_ts(const Common& c, const PairSpec& p, int s, const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    auto d = p.build(&cert.inputs());
    cert.inputs()["s"] = s;
    auto rep = find_ts_witness(d, s, {c.budget_seconds});
    cert.results()["search"] = cert.search_report(rep);
    bool claimed = s >= p.claimed_s();
    cert.results()["freeness-claimed"] = claimed;
    emit(cert, c);
    return exit_code_for(rep, claimed);
}

int run_count(const Common& c, const std::string& mode, const PairSpec& pspec, int pdim, int s,
              int k, const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    cert.inputs()["mode"] = mode;
    cert.inputs()["k"] = k;
    CountResult r;
    if (mode == "fwi") {
        auto d = pspec.build(&cert.inputs());
        r = fwi_count(d, k);
    } else if (mode == "bad-tuples") {
        cert.inputs()["p"] = pdim;
        r = bad_tuple_count(pdim, k);
    } else if (mode == "rank-bound") {
        cert.inputs()["s"] = s;
        r = rank_formula_bound(s, k);
        auto diag = rank_formula_terms(s, k);
        json terms = json::array();
        for (double v : diag.log2_terms) terms.push_back(Certificate::fmt_log2(v));
        cert.results()["log2-terms"] = terms;
        if (k >= s) cert.results()["simplified-exponent-diagnostic"] = diag.simplified_exponent;
    } else if (mode == "spectral-bound") {
        if (pspec.t == 0 && pspec.q == 0)
            throw std::invalid_argument("spectral-bound mode needs --t and --q");
        auto pg = build_polarity_graph(pspec.t, pspec.q);
        cert.inputs()["t"] = pspec.t;
        cert.inputs()["q"] = pspec.q;
        auto ps = pair_params(complement(pg.graph), pg.graph, c.threads);
        cert.results()["w"] = ps.w;
        cert.results()["eta"] = ps.eta.value();
        r = spectral_fwi_bound(ps, k);
    } else {
        throw CLI::ValidationError("--mode must be fwi|bad-tuples|rank-bound|spectral-bound");
    }
    cert.results()["count"] = cert.count_result(r);
    emit(cert, c);
    return r.inconclusive ? 3 : 0;
}

int run_orient(const Common& c, const PairSpec& p, const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    auto d = p.build(&cert.inputs());
    cert.set_seed(c.seed);
    int s = p.claimed_s();
    auto og = orient(d, c.seed);
    auto rep = find_clique(og.graph, s, {c.budget_seconds});
    cert.results()["n"] = og.graph.size();
    cert.results()["edges"] = og.graph.edge_count();
    cert.results()["pi-permutation"] = og.pi;
    cert.results()["clique-report"] = cert.search_report(rep);
    if (!c.out.empty()) {
        write_file(c.out, to_dimacs(og.graph, "oriented from product digraph"));
        write_file(c.out + ".cert.json", cert.dump());
    } else {
        std::cout << cert.dump();
    }
    return exit_code_for(rep, true);
}

int run_witness(const Common& c, const PairSpec& pspec, std::optional<int> k_opt,
                std::optional<double> p_opt, int attempts, const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    auto d = pspec.build(&cert.inputs());
    cert.set_seed(c.seed);
    int s = pspec.claimed_s();
    auto og = orient(d, c.seed);

    int k;
    double prob;
    if (k_opt) {
        k = *k_opt;
        if (p_opt) {
            prob = *p_opt;
        } else {
            auto en = enumerate_independent_ksets(og.graph, k);
            mpz_class ik = static_cast<long>(en.sets.size());
            if (en.truncated) {
                // i_k is a lower bound here; smaller p is safe for p^k i_k <= 1
                cert.add_discrepancy("independent k-set enumeration truncated; p from partial count");
            }
            auto cp = choose_p(ik, k);
            prob = cp.ik_zero ? 1.0 : cp.p;
        }
    } else {
        auto ind = independence_number(og.graph, {c.budget_seconds});
        k = ind.alpha + 1;
        prob = p_opt ? *p_opt : 1.0;
    }
    cert.inputs()["s"] = s;
    cert.inputs()["k"] = k;
    cert.inputs()["p"] = prob;
    cert.inputs()["attempts"] = attempts;

    auto w = sample_and_prune(og.graph, s, k, prob, c.seed, attempts, {c.budget_seconds});
    json jw;
    jw["s"] = w.s;
    jw["k"] = w.k;
    jw["n"] = w.graph.size();
    jw["seed"] = w.seed;
    jw["pi-permutation"] = og.pi;
    jw["deleted-vertices"] = w.deleted;
    jw["kept-vertices"] = w.kept;
    jw["clique-report"] = cert.search_report(w.clique_report);
    jw["independence-report"] = cert.search_report(w.independence.report);
    jw["alpha"] = w.independence.alpha;
    jw["fully-certified"] = w.fully_certified;
    jw["implied-bound"] = "r(" + std::to_string(w.s) + "," + std::to_string(w.k) + ") > " +
                          std::to_string(w.implied_bound_n);
    auto es = erdos_szekeres_upper(w.s, w.k);
    jw["erdos-szekeres-upper"] = es.exact.get_str();
    cert.results()["witness"] = jw;
    if (!c.out.empty()) {
        write_file(c.out + ".json", cert.dump());
        write_file(c.out + ".dimacs", to_dimacs(w.graph, "ramsey witness graph"));
    } else {
        std::cout << cert.dump();
    }
    if (!w.fully_certified) return w.clique_report.found() ? 2 : 3;
    return 0;
}

int run_multicolor(const Common& c, const PairSpec& pspec, int ell, int n,
                   const std::string& command) {
    auto cert = Certificate(command, c.deterministic);
    auto d = pspec.build(&cert.inputs());
    cert.set_seed(c.seed);
    int s = pspec.claimed_s();
    cert.inputs()["ell"] = ell;
    cert.inputs()["n"] = n;
    auto mc = multicolor_build(d, ell, n, c.seed);
    int falsified = 0;
    for (int col = 1; col < ell; ++col) {
        auto g = mc.color_class_graph(col);
        auto rep = find_clique(g, s, {c.budget_seconds});
        cert.results()["color-" + std::to_string(col)] = cert.search_report(rep);
        int code = exit_code_for(rep, true);
        if (code) falsified = code;
    }
    // color ell: count monochromatic K_s and compare to the exact expectation
    long long mono = 0;
    std::vector<int> idx(s);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == s) {
            ++mono;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                if (mc.edge_color(idx[j], v) != ell) ok = false;
            if (!ok) continue;
            idx[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    if (n >= s) rec(0, 0);
    cert.results()["color-ell-monochromatic"] = mono;
    cert.results()["expected-formula"] = multicolor_expected(d, ell, n, s);
    emit(cert, c);
    return falsified;
}

int run_bound(const Common& c, const std::string& name, const BoundParams& bp, long long s,
              long long k, const PairSpec& pspec, const std::string& command) {
    std::vector<BoundReport> reports;
    json extra;
    if (name == "erdos-szekeres") {
        reports.push_back(erdos_szekeres_upper(s, k));
    } else if (name == "thm28") {
        auto pg = build_polarity_graph(pspec.t, pspec.q);
        auto ps = pair_params(complement(pg.graph), pg.graph, c.threads);
        auto r = thm28_eval(ps, static_cast<double>(k));
        BoundReport b;
        b.name = "thm28-branch1";
        b.params = {{"k", static_cast<double>(k)}, {"eta", r.eta}, {"w", r.w}};
        b.log2_value = std::log2(std::max(r.branch1, 1e-300));
        b.flags = r.flags;
        extra["branch1"] = r.branch1;
        extra["branch2"] = r.branch2;
        extra["k-interval"] = {r.k_lo, r.k_hi};
        extra["interval-empty"] = r.interval_empty;
        reports.push_back(b);
    } else {
        reports.push_back(lower_bound_formula(name, bp));
    }
    if (c.format == "csv") {
        std::ostringstream csv;
        csv << "name,params,log2_value,exact_value,flags\n";
        for (auto& b : reports) {
            csv << b.name << ",";
            for (std::size_t i = 0; i < b.params.size(); ++i)
                csv << (i ? ";" : "") << b.params[i].first << "=" << b.params[i].second;
            csv << "," << Certificate::fmt_log2(b.log2_value) << ",";
            if (b.has_exact) csv << b.exact.get_str();
            csv << ",";
            for (std::size_t i = 0; i < b.flags.size(); ++i) csv << (i ? ";" : "") << b.flags[i];
            csv << "\n";
        }
        if (c.out.empty())
            std::cout << csv.str();
        else
            write_file(c.out, csv.str());
        return 0;
    }
    auto cert = Certificate(command, c.deterministic);
    for (auto& b : reports) cert.results()["bounds"].push_back(cert.bound_report(b));
    if (!extra.empty()) cert.results()["thm28"] = extra;
    emit(cert, c);
    return 0;
}

int run_lll(const Common& c, double s, double a, const std::string& command) {
    auto sol = spencer_lll(s, a);
    auto cert = Certificate(command, c.deterministic);
    cert.inputs()["s"] = s;
    cert.inputs()["a"] = a;
    cert.results()["delta"] = sol.delta;
    cert.results()["p"] = sol.p;
    cert.results()["log2-n-bound"] = Certificate::fmt_log2(sol.log2_n_bound);
    cert.results()["residual"] = sol.residual;
    cert.results()["flags"] = sol.flags;
    emit(cert, c);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey lower-bound witness constructions: polarity graphs, product digraphs, "
                 "exact freeness certification, counting, and closed-form bound evaluators"};
    app.require_subcommand(1);
    std::string command = join_args(argc, argv);

    Common c;
    int t = 2, s = 4, k = 1, pdim = 3, ell = 3, n = 20, attempts = 1;
    std::uint32_t q = 2;
    bool use_complement = false;
    std::string mode = "fwi", bound_name;
    PairSpec pair;
    BoundParams bp;
    std::optional<int> k_opt;
    std::optional<double> p_opt;
    double lll_s = 3, lll_a = 0;

    auto* cmd_pol = app.add_subcommand("polarity", "build G(t, q) and certify its parameters");
    cmd_pol->add_option("--t", t)->required();
    cmd_pol->add_option("--q", q)->required();
    cmd_pol->add_option("--format", c.format, "graph file format")
        ->check(CLI::IsMember({"dimacs", "edges"}));
    add_common(cmd_pol, c);

    auto* cmd_cert = app.add_subcommand("certify-spectrum", "exact A^2 = aJ + (d-a)I certificate");
    cmd_cert->add_option("--t", t)->required();
    cmd_cert->add_option("--q", q)->required();
    cmd_cert->add_flag("--complement", use_complement, "certify the loop-flipped complement");
    add_common(cmd_cert, c);

    auto* cmd_hs = app.add_subcommand("check-hs", "H_s search on (complement(G(t,q)), G(t,q))");
    cmd_hs->add_option("--t", t)->required();
    cmd_hs->add_option("--q", q)->required();
    cmd_hs->add_option("--s", s)->required();
    add_common(cmd_hs, c);

    auto* cmd_prod = app.add_subcommand("product", "build the product digraph");
    add_pair_options(cmd_prod, pair);
    add_common(cmd_prod, c);

    auto* cmd_ts = app.add_subcommand("check-ts", "transitive tournament search on the product");
    add_pair_options(cmd_ts, pair);
    cmd_ts->add_option("--s", s)->required();
    add_common(cmd_ts, c);

    auto* cmd_count = app.add_subcommand("count", "exact counts and bound formulas");
    cmd_count->add_option("--mode", mode, "fwi|bad-tuples|rank-bound|spectral-bound");
    add_pair_options(cmd_count, pair);
    cmd_count->add_option("--p", pdim, "dimension for bad-tuples mode");
    cmd_count->add_option("--s", s, "s for rank-bound mode");
    cmd_count->add_option("--k", k)->required();
    add_common(cmd_count, c);

    auto* cmd_orient = app.add_subcommand("orient", "random orientation of the product digraph");
    add_pair_options(cmd_orient, pair);
    add_common(cmd_orient, c);

    auto* cmd_wit = app.add_subcommand("witness", "end-to-end certified Ramsey witness");
    add_pair_options(cmd_wit, pair);
    auto* wk = cmd_wit->add_option("--k", "independence target (default alpha+1)");
    auto* wp = cmd_wit->add_option("--p", "sampling probability (default 1 or i_k^(-1/k))");
    cmd_wit->add_option("--attempts", attempts, "independent sampling attempts; best witness wins");
    add_common(cmd_wit, c);

    auto* cmd_mc = app.add_subcommand("multicolor", "random homomorphism edge coloring");
    add_pair_options(cmd_mc, pair);
    cmd_mc->add_option("--ell", ell)->required();
    cmd_mc->add_option("--n", n)->required();
    add_common(cmd_mc, c);

    auto* cmd_bound = app.add_subcommand("bound", "closed-form bound evaluators (csv or json)");
    cmd_bound->add_option("--name", bound_name,
                          "erdos-szekeres|thm-main|thm-general|thm-kck|thm-close|"
                          "thm-multicolor|spencer-close|thm28")
        ->required();
    cmd_bound->add_option("--s", s);
    cmd_bound->add_option("--k", k);
    cmd_bound->add_option("--a", bp.a);
    cmd_bound->add_option("--C", bp.C);
    cmd_bound->add_option("--ell", bp.ell);
    cmd_bound->add_option("--delta", bp.delta);
    auto* cs_opt = cmd_bound->add_option("--cs", bp.c_s, "caller-supplied c_s for thm-main");
    cmd_bound->add_option("--t", pair.t, "for thm28");
    cmd_bound->add_option("--q", pair.q, "for thm28");
    cmd_bound->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    add_common(cmd_bound, c);

    auto* cmd_lll = app.add_subcommand("lll", "local-lemma optimizer near the diagonal");
    cmd_lll->add_option("--s", lll_s)->required();
    cmd_lll->add_option("--a", lll_a);
    add_common(cmd_lll, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_pol->parsed()) return run_polarity(c, t, q, command);
        if (cmd_cert->parsed()) return run_certify(c, t, q, use_complement, command);
        if (cmd_hs->parsed()) return run_check_hs(c, t, q, s, command);
        if (cmd_prod->parsed()) return run_product(c, pair, command);
        if (cmd_ts->parsed()) return run_check_ts(c, pair, s, command);
        if (cmd_count->parsed()) return run_count(c, mode, pair, pdim, s, k, command);
        if (cmd_orient->parsed()) return run_orient(c, pair, command);
        if (cmd_wit->parsed()) {
            if (wk->count()) k_opt = wk->as<int>();
            if (wp->count()) p_opt = wp->as<double>();
            return run_witness(c, pair, k_opt, p_opt, attempts, command);
        }
        if (cmd_mc->parsed()) return run_multicolor(c, pair, ell, n, command);
        if (cmd_bound->parsed()) {
            bp.s = static_cast<double>(s);
            bp.k = static_cast<double>(k);
            bp.c_s_supplied = cs_opt->count() > 0;
            return run_bound(c, bound_name, bp, s, k, pair, command);
        }
        if (cmd_lll->parsed()) return run_lll(c, lll_s, lll_a, command);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
