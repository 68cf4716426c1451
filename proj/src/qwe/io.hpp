#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qwe/analysis.hpp"
#include "qwe/haar.hpp"
#include "qwe/polynomials.hpp"
#include "qwe/shadow.hpp"

namespace qwe {

using Json = nlohmann::json;

// ---- scalar serialization -------------------------------------------------

inline Json value_json(const Rational& r) { return rational_str(r); }
inline Json value_json(double v) { return v; }

inline Json complex_json(const GRat& v) {
    return Json::array({rational_str(v.re), rational_str(v.im)});
}
inline Json complex_json(const CF& v) { return Json::array({v.real(), v.imag()}); }

template <class R>
Json weights_json(const WeightDistribution<R>& w) {
    Json arr = Json::array();
    for (const auto& c : w.coeffs) arr.push_back(value_json(c));
    return arr;
}

template <class R>
Json poly_json(const EnumPolynomial<R>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs) arr.push_back(value_json(c));
    return arr;
}

template <class R>
Json subset_table_json(const SubsetEnumTable<R>& t) {
    Json obj = Json::object();
    for (SubsetMask s : all_subsets_sorted(t.fact.n())) {
        std::string key = "[";
        auto idx = mask_to_indices(s);
        for (std::size_t i = 0; i < idx.size(); ++i) key += (i ? "," : "") + std::to_string(idx[i]);
        key += "]";
        obj[key] = value_json(t.values.at(s));
    }
    return obj;
}

// ---- coefficient lists (CLI transform surface) ----------------------------

/// "2,0,0,60,30,36" with optional "p/q" entries -> exact polynomial.
EnumPolynomial<Rational> parse_coeff_list(const std::string& text);
std::string coeff_list_str(const EnumPolynomial<Rational>& p);

// ---- operator / vector files ----------------------------------------------

using AnyOp = std::variant<Op<GRat>, Op<CF>>;
using AnyCode = std::variant<CodeStates<GRat>, CodeStates<CF>>;

/// {"dims":[2,2], "entries":[[re,im],...]} row-major; entries exact when
/// every component is a "p/q" string, float otherwise.
AnyOp parse_operator_json(const Json& doc);
Json operator_json(const AnyOp& op);

/// {"dims":[...], "vectors":[[[re,im],...],...]}; vectors are orthogonal,
/// possibly unnormalized.
AnyCode parse_code_vectors_json(const Json& doc);
Json code_vectors_json(const AnyCode& code);

// ---- reports --------------------------------------------------------------

/// Full analysis of a code: weight distributions, polynomials, distance,
/// purity, erasures, inequality audit.  Deterministic (sorted keys,
/// canonical subset order).
template <class S>
Json code_report(const CodeStates<S>& code, double tol = kTol, int erasure_max = -1) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    code.validate(tol);
    int kdim = code.dim_code();
    auto enums = enumerate_code(code);
    auto dist = certify_distance(enums, kdim, tol);
    bool pure = check_purity(enums, dist, tol);
    auto audit = audit_inequalities(enums, kdim);
    Json rep;
    rep["backend"] = T::is_exact ? "exact" : "float";
    rep["dims"] = code.fact.dims;
    rep["n"] = code.fact.n();
    rep["K"] = kdim;
    rep["distance"] = dist.d;
    rep["distance_witness_weight"] = dist.witness;
    rep["pure"] = pure;
    rep["subsets"] = {{"A", subset_table_json(enums.a)},
                     {"B", subset_table_json(enums.b)},
                     {"Aprime", subset_table_json(enums.aprime)},
                     {"Bprime", subset_table_json(enums.bprime)}};
    bool equal_dims = true;
    for (int d : code.fact.dims) equal_dims = equal_dims && d == code.fact.dims[0];
    if (equal_dims) {
        rep["weights"] = {{"A", weights_json(enums.wa)},
                         {"B", weights_json(enums.wb)},
                         {"Aprime", weights_json(enums.waprime)},
                         {"Bprime", weights_json(enums.wbprime)}};
        EnumPolynomial<R> ap(enums.waprime.coeffs);
        rep["polynomials"] = {{"A", poly_json(EnumPolynomial<R>(enums.wa.coeffs))},
                             {"B", poly_json(EnumPolynomial<R>(enums.wb.coeffs))},
                             {"Aprime", poly_json(ap)},
                             {"Bprime", poly_json(EnumPolynomial<R>(enums.wbprime.coeffs))},
                             {"shadow", poly_json(shadow_poly(ap))}};
    }
    int max_size = erasure_max < 0 ? code.fact.n() : erasure_max;
    auto erasures = erasure_report(enums, kdim, max_size, tol);
    Json corr = Json::array(), uncorr = Json::array();
    for (SubsetMask s : all_subsets_sorted(code.fact.n())) {
        auto it = erasures.find(s);
        if (it == erasures.end()) continue;
        (it->second ? corr : uncorr).push_back(mask_to_indices(s));
    }
    rep["erasures"] = {{"max_size", max_size}, {"correctable", corr}, {"uncorrectable", uncorr}};
    rep["inequality_audit"] = {{"min_slack", audit.min_slack},
                              {"min_value", audit.min_value},
                              {"max_k1_gap", audit.max_k1_gap},
                              {"ok", audit.ok(tol)}};
    return rep;
}

Json fuzz_records_json(const std::vector<FuzzRecord>& records);

}  // namespace qwe
