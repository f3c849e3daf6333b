#pragma once

#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/freeness.hpp"
#include "ramsey/product.hpp"

namespace ramsey {

using json = nlohmann::json;

// Process exit contract shared by the CLI commands: 2 exactly when a
// re-validated witness contradicts a claimed freeness property (the
// falsification case), 3 when the search was inconclusive, 1 when a found
// witness fails re-validation (an internal error), 0 otherwise.
inline int exit_code_for(const SearchReport& rep, bool freeness_claimed) {
    if (rep.inconclusive()) return 3;
    if (rep.found() && freeness_claimed) return rep.witness_validated ? 2 : 1;
    return 0;
}

// Machine-checkable run record. Big integers are decimal strings, bounds are
// log2 values with 12 significant digits, and every numeric result carries a
// method tag. Timings are dropped in deterministic mode so identical
// command + seed reproduce identical bytes.
class Certificate {
public:
    Certificate(std::string command, bool deterministic)
        : deterministic_(deterministic) {
        j_["schema-version"] = 1;
        j_["command"] = std::move(command);
    }

    void set_seed(std::uint64_t seed) { j_["seed"] = seed; }
    json& inputs() { return j_["inputs"]; }
    json& results() { return j_["results"]; }
    void add_discrepancy(const std::string& note) { j_["discrepancies"].push_back(note); }
    void set_timing(const std::string& key, double seconds) {
        if (!deterministic_) j_["timings"][key] = seconds;
    }

    json search_report(const SearchReport& r) const {
        json o;
        o["method"] = "search";
        o["property"] = r.property;
        o["result"] = SearchReport::result_name(r.result);
        o["nodes"] = r.nodes;
        if (r.found()) {
            o["witness"] = r.witness;
            o["witness-validated"] = r.witness_validated;
        }
        if (!deterministic_) o["seconds"] = r.seconds;
        return o;
    }

    json count_result(const CountResult& c) const {
        json o;
        o["method"] = c.method;
        o["params"] = c.params;
        if (c.inconclusive) {
            o["result"] = "inconclusive";
            o["nodes"] = c.nodes;
            return o;
        }
        if (c.has_exact) o["value"] = c.exact.get_str();
        o["log2"] = fmt_log2(c.log2_value);
        o["is-upper-bound"] = c.is_upper_bound;
        return o;
    }

    json bound_report(const BoundReport& b) const {
        json o;
        o["name"] = b.name;
        for (auto& [k, v] : b.params) o["params"][k] = v;
        o["log2"] = fmt_log2(b.log2_value);
        if (b.has_exact) o["value"] = b.exact.get_str();
        o["flags"] = b.flags;
        return o;
    }

    static json field_descriptor(const FiniteField& f) {
        json o;
        o["p"] = f.characteristic();
        o["m"] = f.degree();
        o["poly-coefficients"] = f.reduction_poly();
        return o;
    }

    static json spectral(const SpectralCertificate& c) {
        json o;
        o["n"] = c.n;
        o["d"] = c.d;
        o["a"] = c.a;
        o["lambda-squared"] = c.lambda_squared;
        o["verified"] = c.verified;
        if (!c.verified) {
            o["failure"] = c.failure;
            if (c.bad_u >= 0) o["bad-u"] = c.bad_u;
            if (c.bad_v >= 0) o["bad-v"] = c.bad_v;
        }
        return o;
    }

    static std::string fmt_log2(double v) {
        std::ostringstream s;
        s << std::setprecision(12) << v;
        return s.str();
    }

    std::string dump() const { return j_.dump(2) + "\n"; }
    const json& raw() const { return j_; }

private:
    json j_;
    bool deterministic_;
};

}  // namespace ramsey
