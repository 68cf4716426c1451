#include "qwe.h"

#include <cstring>
#include <string>

#include "qwe/io.hpp"
#include "qwe/stabilizer.hpp"

using namespace qwe;

struct qwe_code {
    AnyCode code;
};
struct qwe_operator {
    AnyOp op;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
qwe_status guard(F&& f) {
    try {
        f();
        return QWE_OK;
    } catch (const ConsistencyError& e) {
        g_last_error = e.what();
        return QWE_ERR_INTERNAL;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return QWE_ERR_CONTRACT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return QWE_ERR_CONTRACT;
    } catch (const Json::exception& e) {
        g_last_error = e.what();
        return QWE_ERR_CONTRACT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QWE_ERR_INTERNAL;
    }
}

double effective_tol(double tol) { return tol > 0 ? tol : kTol; }

// Exact subset tables cost rational arithmetic on 2^n subsets; past this
// size the analysis switches to the float backend.
constexpr int kExactAnalysisMaxFactors = 6;

AnyCode analysis_view(const AnyCode& code) {
    if (const auto* exact = std::get_if<CodeStates<GRat>>(&code))
        if (exact->fact.n() > kExactAnalysisMaxFactors) return to_float(*exact);
    return code;
}

Isometry<CF> to_float(const Isometry<GRat>& iso) {
    return Isometry<CF>{iso.block_fact, qwe::to_float(iso.mat)};
}

// unify backends: exact only when both sides are exact
std::pair<AnyOp, AnyOp> unify(const AnyOp& a, const AnyOp& b) {
    const auto* ea = std::get_if<Op<GRat>>(&a);
    const auto* eb = std::get_if<Op<GRat>>(&b);
    if (ea && eb) return {a, b};
    AnyOp fa = ea ? AnyOp(qwe::to_float(*ea)) : a;
    AnyOp fb = eb ? AnyOp(qwe::to_float(*eb)) : b;
    return {fa, fb};
}

}  // namespace

extern "C" {

const char* qwe_version(void) { return "0.1.0"; }

const char* qwe_last_error(void) { return g_last_error.c_str(); }

void qwe_string_free(char* s) { std::free(s); }

qwe_status qwe_code_from_stabilizer(const char* text, qwe_code** out) {
    return guard([&] { *out = new qwe_code{parse_stabilizer(text ? text : "")}; });
}

qwe_status qwe_code_builtin(const char* name, qwe_code** out) {
    return guard([&] { *out = new qwe_code{builtin_code(name ? name : "")}; });
}

qwe_status qwe_code_from_vectors_json(const char* json_text, qwe_code** out) {
    return guard([&] {
        *out = new qwe_code{parse_code_vectors_json(Json::parse(json_text ? json_text : ""))};
    });
}

void qwe_code_free(qwe_code* code) { delete code; }

qwe_status qwe_code_report(const qwe_code* code, double tol, char** json_out) {
    return guard([&] {
        AnyCode view = analysis_view(code->code);
        Json rep = std::visit([&](const auto& c) { return code_report(c, effective_tol(tol)); },
                              view);
        *json_out = dup_string(rep.dump());
    });
}

qwe_status qwe_code_distance(const qwe_code* code, double tol, char** json_out) {
    return guard([&] {
        AnyCode view = analysis_view(code->code);
        Json rep = std::visit(
            [&](const auto& c) {
                double t = effective_tol(tol);
                c.validate(t);
                auto enums = enumerate_code(c);
                auto dist = certify_distance(enums, c.dim_code(), t);
                Json j;
                j["d"] = dist.d;
                j["witness_weight"] = dist.witness;
                j["pure"] = check_purity(enums, dist, t);
                j["K"] = c.dim_code();
                j["n"] = c.fact.n();
                return j;
            },
            view);
        *json_out = dup_string(rep.dump());
    });
}

qwe_status qwe_code_erasures(const qwe_code* code, int max_size, double tol, char** json_out) {
    return guard([&] {
        AnyCode view = analysis_view(code->code);
        Json rep = std::visit(
            [&](const auto& c) {
                double t = effective_tol(tol);
                c.validate(t);
                int cap = max_size < 0 ? c.fact.n() : max_size;
                if (cap > c.fact.n()) throw std::invalid_argument("max_size exceeds n");
                auto enums = enumerate_code(c);
                auto report = erasure_report(enums, c.dim_code(), cap, t);
                Json corr = Json::array(), uncorr = Json::array();
                for (SubsetMask s : all_subsets_sorted(c.fact.n())) {
                    auto it = report.find(s);
                    if (it == report.end()) continue;
                    (it->second ? corr : uncorr).push_back(mask_to_indices(s));
                }
                Json j;
                j["max_size"] = cap;
                j["correctable"] = corr;
                j["uncorrectable"] = uncorr;
                return j;
            },
            view);
        *json_out = dup_string(rep.dump());
    });
}

qwe_status qwe_code_shorten(const qwe_code* code, int factor, qwe_code** out) {
    return guard([&] {
        *out = new qwe_code{std::visit(
            [&](const auto& c) -> AnyCode { return shorten(c, factor); }, code->code)};
    });
}

qwe_status qwe_code_extend(const qwe_code* code, qwe_code** out) {
    return guard([&] {
        *out = new qwe_code{
            std::visit([&](const auto& c) -> AnyCode { return extend(c); }, code->code)};
    });
}

qwe_status qwe_code_concat(const qwe_code* outer, const char* encoder_name, qwe_code** out) {
    return guard([&] {
        Isometry<GRat> enc = builtin_encoder(encoder_name ? encoder_name : "");
        *out = new qwe_code{std::visit(
            [&](const auto& c) -> AnyCode {
                if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CodeStates<GRat>>)
                    return concatenate(c, enc);
                else
                    return concatenate(c, to_float(enc));
            },
            outer->code)};
    });
}

qwe_status qwe_operator_from_json(const char* json_text, qwe_operator** out) {
    return guard([&] {
        *out = new qwe_operator{parse_operator_json(Json::parse(json_text ? json_text : ""))};
    });
}

void qwe_operator_free(qwe_operator* op) { delete op; }

qwe_status qwe_pair_enumerate(const qwe_operator* m1, const qwe_operator* m2, char** json_out) {
    return guard([&] {
        auto [a, b] = unify(m1->op, m2->op);
        Json rep = std::visit(
            [&](const auto& x) {
                using OpT = std::decay_t<decltype(x)>;
                const auto& y = std::get<OpT>(b);
                if (!(x.fact == y.fact)) throw std::invalid_argument("factorization mismatch");
                auto ap = primed_table_dense(x, y, EnumKind::APrime);
                auto bp = primed_table_dense(x, y, EnumKind::BPrime);
                auto ta = unprimed_table(ap);
                auto tb = unprimed_table(bp);
                Json j;
                j["backend"] = ScalarTraits<typename OpT::value_type>::is_exact ? "exact" : "float";
                j["dims"] = x.fact.dims;
                j["subsets"] = {{"A", subset_table_json(ta)},
                               {"B", subset_table_json(tb)},
                               {"Aprime", subset_table_json(ap)},
                               {"Bprime", subset_table_json(bp)}};
                bool equal_dims = true;
                for (int d : x.fact.dims) equal_dims = equal_dims && d == x.fact.dims[0];
                if (equal_dims)
                    j["weights"] = {{"A", weights_json(subset_to_weight(ta))},
                                   {"B", weights_json(subset_to_weight(tb))},
                                   {"Aprime", weights_json(subset_to_weight(ap))},
                                   {"Bprime", weights_json(subset_to_weight(bp))}};
                return j;
            },
            a);
        *json_out = dup_string(rep.dump());
    });
}

qwe_status qwe_transform(const char* coeffs, int block_dim, const char* kind, char** out) {
    return guard([&] {
        auto poly = parse_coeff_list(coeffs ? coeffs : "");
        std::string k = kind ? kind : "";
        EnumPolynomial<Rational> result;
        if (k == "macwilliams")
            result = macwilliams(poly, block_dim);
        else if (k == "shadow")
            result = shadow_poly(poly);
        else if (k == "to-primed")
            result = to_primed(poly, block_dim);
        else if (k == "from-primed")
            result = from_primed(poly, block_dim);
        else
            throw std::invalid_argument("unknown transform kind: " + k);
        *out = dup_string(coeff_list_str(result));
    });
}

qwe_status qwe_fuzz_shadow(int max_n, int max_d, long trials, unsigned long long seed,
                           char** json_out) {
    return guard([&] {
        auto records = fuzz_conjecture(max_n, max_d, trials, seed);
        *json_out = dup_string(fuzz_records_json(records).dump());
    });
}

qwe_status qwe_haar_check(const qwe_operator* m1, const qwe_operator* m2, const int* subset,
                          int subset_len, const char* kind, long samples,
                          unsigned long long seed, char** json_out) {
    return guard([&] {
        auto as_float = [](const AnyOp& op) {
            if (const auto* e = std::get_if<Op<GRat>>(&op)) return to_float(*e);
            return std::get<Op<CF>>(op);
        };
        Op<CF> a = as_float(m1->op), b = as_float(m2->op);
        if (!(a.fact == b.fact)) throw std::invalid_argument("factorization mismatch");
        std::vector<int> idx(subset, subset + subset_len);
        SubsetMask s = indices_to_mask(idx, a.fact.n());
        std::string k = kind ? kind : "";
        EnumKind ek;
        if (k == "Aprime")
            ek = EnumKind::APrime;
        else if (k == "Bprime")
            ek = EnumKind::BPrime;
        else
            throw std::invalid_argument("kind must be Aprime or Bprime");
        auto est = haar_oracle(a, b, s, ek, samples, seed);
        double exact = unitary_enum_subset(a, b, s, ek);
        Json j;
        j["estimate"] = est.mean;
        j["stderr"] = est.stderr_;
        j["exact"] = exact;
        j["samples"] = est.samples;
        j["sigma_distance"] =
            est.stderr_ > 0 ? std::abs(est.mean - exact) / est.stderr_ : std::abs(est.mean - exact);
        *json_out = dup_string(j.dump());
    });
}

}  // extern "C"
