#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qwe/enumerators.hpp"

namespace qwe {

/// Scale-aware equality for the float backend: |lhs - rhs| <= tol * max(1, |rhs|).
template <class T>
bool values_equal(const typename T::Real& lhs, const typename T::Real& rhs, double tol) {
    if constexpr (T::is_exact) {
        return lhs == rhs;
    } else {
        return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
    }
}

struct DistanceResult {
    int d = 1;
    // first weight at which the certification criterion fails; n+1 if the
    // criterion never fails (then d = n+1 as well)
    int witness = 0;
};

/// Largest d such that K B_i = A_i for all 0 <= i < d (weight-aggregated;
/// per-subset when dims are unequal).  For K = 1 the
/// equality is an identity, so the pure-distance criterion A_i = 0 is used
/// instead.
template <class S>
DistanceResult certify_distance(const EnumSet<S>& e, int code_dim, double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    const Factorization& fact = e.aprime.fact;
    int n = fact.n();
    bool equal_dims = true;
    for (int d : fact.dims) equal_dims = equal_dims && d == fact.dims[0];
    R kk = R(code_dim);
    auto weight_ok = [&](int i) {
        if (equal_dims) {
            if (code_dim == 1) return values_equal<T>(e.wa.coeffs[i], R{}, tol);
            return values_equal<T>(kk * e.wb.coeffs[i], e.wa.coeffs[i], tol);
        }
        for (SubsetMask s : subsets_of_size(n, i)) {
            bool ok = code_dim == 1
                          ? values_equal<T>(e.a.values.at(s), R{}, tol)
                          : values_equal<T>(kk * e.b.values.at(s), e.a.values.at(s), tol);
            if (!ok) return false;
        }
        return true;
    };
    DistanceResult res;
    res.witness = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (!weight_ok(i)) {
            res.witness = i;
            break;
        }
    }
    res.d = res.witness;
    return res;
}

/// The subset-criterion distance scan: K B_i = A_i for all 1 <= i <= max_weight
/// (per subset when dims are unequal).  For K = 1 the equality holds
/// identically, which is exactly the sense in which constructions such as
/// concatenation certify their distance bound; the reported distance of a
/// rank-1 code uses the nondegeneracy convention instead (A_i != 0).
template <class S>
bool distance_criterion_holds(const EnumSet<S>& e, int code_dim, int max_weight,
                              double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    const Factorization& fact = e.aprime.fact;
    bool equal_dims = true;
    for (int d : fact.dims) equal_dims = equal_dims && d == fact.dims[0];
    R kk = R(code_dim);
    for (int i = 1; i <= max_weight && i <= fact.n(); ++i) {
        if (equal_dims) {
            if (!values_equal<T>(kk * e.wb.coeffs[i], e.wa.coeffs[i], tol)) return false;
        } else {
            for (SubsetMask s : subsets_of_size(fact.n(), i))
                if (!values_equal<T>(kk * e.b.values.at(s), e.a.values.at(s), tol)) return false;
        }
    }
    return true;
}

/// Pure iff A_i = 0 for 1 <= i < d.
template <class S>
bool check_purity(const EnumSet<S>& e, const DistanceResult& dist, double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    const Factorization& fact = e.aprime.fact;
    bool equal_dims = true;
    for (int d : fact.dims) equal_dims = equal_dims && d == fact.dims[0];
    for (int i = 1; i < dist.d && i <= fact.n(); ++i) {
        if (equal_dims) {
            if (!values_equal<T>(e.wa.coeffs[i], R{}, tol)) return false;
        } else {
            for (SubsetMask s : subsets_of_size(fact.n(), i))
                if (!values_equal<T>(e.a.values.at(s), R{}, tol)) return false;
        }
    }
    return true;
}

/// S correctable (erasure of the factors in S) iff K B'_S = A'_S.
template <class S>
std::map<SubsetMask, bool> erasure_report(const EnumSet<S>& e, int code_dim, int max_size,
                                          double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    std::map<SubsetMask, bool> out;
    R kk = R(code_dim);
    for (const auto& [s, bp] : e.bprime.values) {
        if (popcount(s) > max_size) continue;
        out[s] = values_equal<T>(kk * bp, e.aprime.values.at(s), tol);
    }
    return out;
}

struct InequalityAudit {
    double min_slack = 0.0;      // min over S of K*B - A, both families
    double min_value = 0.0;      // min over S of A_S and A'_S themselves
    double max_k1_gap = 0.0;     // max |A - B| over S; meaningful when K = 1
    bool ok(double tol = kTol) const { return min_slack >= -tol && min_value >= -tol; }
};

template <class S>
InequalityAudit audit_inequalities(const EnumSet<S>& e, int code_dim) {
    using T = ScalarTraits<S>;
    InequalityAudit audit;
    bool first = true;
    auto feed = [&](const typename T::Real& a, const typename T::Real& b) {
        double av = T::real_to_double(a);
        double slack = code_dim * T::real_to_double(b) - av;
        double gap = std::abs(T::real_to_double(b) - av);
        if (first) {
            audit.min_slack = slack;
            audit.min_value = av;
            audit.max_k1_gap = gap;
            first = false;
        } else {
            audit.min_slack = std::min(audit.min_slack, slack);
            audit.min_value = std::min(audit.min_value, av);
            audit.max_k1_gap = std::max(audit.max_k1_gap, gap);
        }
    };
    for (const auto& [s, a] : e.a.values) feed(a, e.b.values.at(s));
    for (const auto& [s, ap] : e.aprime.values) feed(ap, e.bprime.values.at(s));
    return audit;
}

/// Brute-force Knill-Laflamme check used as an independent oracle for the
/// distance certifier: for every error of weight < d, <v_i|E|v_j> must be
/// delta_ij c_E over an orthonormal codeword basis.
template <class S>
bool knill_laflamme_check(const CodeStates<S>& code, int d, double tol = kTol) {
    using T = ScalarTraits<S>;
    require_qubits(code.fact);
    long dim = code.fact.total_dim();
    int kdim = code.dim_code();
    bool ok = true;
    for (int w = 0; w < d && ok; ++w) {
        for_each_error_of_weight(code.fact, w, [&](const PauliError& e) {
            if (!ok) return;
            // elements <v_i| E |v_j> / (|v_i||v_j|)
            std::vector<std::vector<CF>> elem(kdim, std::vector<CF>(kdim));
            for (int i = 0; i < kdim; ++i)
                for (int j = 0; j < kdim; ++j) {
                    S acc{};
                    for (long b = 0; b < dim; ++b) {
                        long img;
                        S ph;
                        e.column_action(b, code.fact, img, ph);
                        acc += T::conj(code.columns[i][img]) * ph * code.columns[j][b];
                    }
                    double scale = std::sqrt(T::real_to_double(code.norm2[i]) *
                                             T::real_to_double(code.norm2[j]));
                    elem[i][j] = to_complex(acc) / scale;
                }
            CF c = elem[0][0];
            for (int i = 0; i < kdim && ok; ++i)
                for (int j = 0; j < kdim && ok; ++j) {
                    CF want = (i == j) ? c : CF{};
                    if (std::abs(elem[i][j] - want) > tol * std::max(1.0, std::abs(c))) ok = false;
                }
        });
    }
    return ok;
}

}  // namespace qwe
