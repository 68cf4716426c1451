#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwe/hilbert.hpp"
#include "qwe/pauli.hpp"

namespace qwe {

enum class EnumKind { A, B, APrime, BPrime };

inline const char* kind_name(EnumKind k) {
    switch (k) {
        case EnumKind::A: return "A";
        case EnumKind::B: return "B";
        case EnumKind::APrime: return "A'";
        case EnumKind::BPrime: return "B'";
    }
    return "?";
}

/// Map from subset to enumerator value, one of the four families.
template <class R>
struct SubsetEnumTable {
    Factorization fact;
    EnumKind kind;
    std::map<SubsetMask, R> values;
};

/// Weight-aggregated coefficients, index d = 0..n.  Only defined when all
/// factor dimensions are equal.
template <class R>
struct WeightDistribution {
    EnumKind kind;
    std::vector<R> coeffs;
};

/// A'_S = Tr(Tr_{S^c} M1 · Tr_{S^c} M2);  B'_S = Tr(Tr_S M1 · Tr_S M2).
template <class S>
typename ScalarTraits<S>::Real unitary_enum_subset(const Op<S>& m1, const Op<S>& m2,
                                                   SubsetMask s, EnumKind kind) {
    using T = ScalarTraits<S>;
    if (!(m1.fact == m2.fact)) throw std::invalid_argument("factorization mismatch");
    if (kind != EnumKind::APrime && kind != EnumKind::BPrime)
        throw std::invalid_argument("unitary_enum_subset handles A'/B' only");
    m1.fact.check_subset(s);
    SubsetMask traced = (kind == EnumKind::APrime) ? m1.fact.complement(s) : s;
    auto t1 = partial_trace(m1, traced);
    auto t2 = partial_trace(m2, traced);
    return T::real((t1.mat * t2.mat).trace());
}

/// Rank-factored evaluation of A'_S/B'_S on the projector induced by a code,
/// via gram_contraction; never materializes a total_dim^2 matrix.
template <class S>
typename ScalarTraits<S>::Real unitary_enum_subset_factored(const CodeStates<S>& code,
                                                            SubsetMask s, EnumKind kind) {
    using T = ScalarTraits<S>;
    if (kind != EnumKind::APrime && kind != EnumKind::BPrime)
        throw std::invalid_argument("unitary_enum_subset_factored handles A'/B' only");
    code.fact.check_subset(s);
    SubsetMask traced = (kind == EnumKind::APrime) ? code.fact.complement(s) : s;
    typename T::Real acc{};
    for (std::size_t i = 0; i < code.columns.size(); ++i)
        for (std::size_t j = 0; j < code.columns.size(); ++j) {
            auto g = gram_contraction(code.columns[i], code.columns[j], traced, code.fact);
            acc += g / (code.norm2[i] * code.norm2[j]);
        }
    return acc;
}

enum class MobiusKind { Primed, Unprimed };

/// M'_S = (1/dim V_{S^c}) (Tr_{S^c} M ⊗ 1_{S^c});  M_S = Möbius alternation
/// of the M'_T over T ⊆ S.
template <class S>
Op<S> mobius_projection(const Op<S>& m, SubsetMask s, MobiusKind which) {
    using T = ScalarTraits<S>;
    m.fact.check_subset(s);
    auto primed = [&](SubsetMask t) {
        SubsetMask rest = m.fact.complement(t);
        Op<S> traced = partial_trace(m, rest);
        Op<S> emb = tensor_embed(Op<S>(traced.fact, traced.mat), t, m.fact);
        S inv = T::from_int(m.fact.subset_dim(rest));
        for (std::size_t r = 0; r < emb.mat.rows(); ++r)
            for (std::size_t c = 0; c < emb.mat.cols(); ++c) emb.mat(r, c) /= inv;
        return emb;
    };
    if (which == MobiusKind::Primed) return primed(s);
    Op<S> acc(m.fact, Matrix<S>(m.fact.total_dim(), m.fact.total_dim()));
    for_each_submask(s, [&](SubsetMask t) {
        Op<S> pt = primed(t);
        if ((popcount(s) - popcount(t)) % 2 == 0)
            acc.mat += pt.mat;
        else
            acc.mat -= pt.mat;
    });
    return acc;
}

/// Dense-path Shor-Laflamme subset enumerators via the projection calculus:
/// A_S = dim(V) Tr(M_S N_S);  B_S by Möbius inversion from the B'_T values.
template <class S>
typename ScalarTraits<S>::Real sl_enum_subset(const Op<S>& m1, const Op<S>& m2, SubsetMask s,
                                              EnumKind kind) {
    using T = ScalarTraits<S>;
    if (!(m1.fact == m2.fact)) throw std::invalid_argument("factorization mismatch");
    m1.fact.check_subset(s);
    if (kind == EnumKind::A) {
        auto ms = mobius_projection(m1, s, MobiusKind::Unprimed);
        auto ns = mobius_projection(m2, s, MobiusKind::Unprimed);
        return T::real((ms.mat * ns.mat).trace()) * typename T::Real(m1.fact.total_dim());
    }
    if (kind != EnumKind::B) throw std::invalid_argument("sl_enum_subset handles A/B only");
    typename T::Real acc{};
    for_each_submask(s, [&](SubsetMask t) {
        auto bp = unitary_enum_subset(m1, m2, t, EnumKind::BPrime);
        typename T::Real term = bp * typename T::Real(m1.fact.subset_dim(t));
        if ((popcount(s) - popcount(t)) % 2 == 0)
            acc += term;
        else
            acc -= term;
    });
    return acc;
}

/// Möbius inversion A_S (resp. B_S) from a full primed table:
/// X_S = sum_{T ⊆ S} (-1)^{|S|-|T|} dim(V_T) X'_T.
template <class R>
R unprime_subset(const SubsetEnumTable<R>& primed, SubsetMask s) {
    R acc{};
    for_each_submask(s, [&](SubsetMask t) {
        R term = primed.values.at(t) * R(primed.fact.subset_dim(t));
        if ((popcount(s) - popcount(t)) % 2 == 0)
            acc += term;
        else
            acc -= term;
    });
    return acc;
}

/// Full primed table for a rank-factored code.  Always evaluates the gram
/// contraction on the smaller traced side, using A'_S = B'_{S^c}.
template <class S>
SubsetEnumTable<typename ScalarTraits<S>::Real> primed_table_factored(const CodeStates<S>& code,
                                                                      EnumKind kind) {
    using R = typename ScalarTraits<S>::Real;
    SubsetEnumTable<R> table{code.fact, kind, {}};
    for (SubsetMask s = 0; s <= code.fact.full_mask(); ++s) {
        SubsetMask traced = (kind == EnumKind::APrime) ? code.fact.complement(s) : s;
        // duality: evaluating with traced set X costs dim(V_X)^2 dim(V_{X^c});
        // the complementary route gives the same value, so pick the cheaper.
        SubsetMask other = code.fact.complement(traced);
        long dx = code.fact.subset_dim(traced);
        EnumKind use_kind = kind;
        SubsetMask use_s = s;
        if (code.fact.subset_dim(other) < dx) {
            use_kind = (kind == EnumKind::APrime) ? EnumKind::BPrime : EnumKind::APrime;
            use_s = code.fact.complement(s);
        }
        table.values[s] = unitary_enum_subset_factored(code, use_s, use_kind);
    }
    return table;
}

/// Dense primed table for an operator pair.
template <class S>
SubsetEnumTable<typename ScalarTraits<S>::Real> primed_table_dense(const Op<S>& m1, const Op<S>& m2,
                                                                   EnumKind kind) {
    using R = typename ScalarTraits<S>::Real;
    SubsetEnumTable<R> table{m1.fact, kind, {}};
    for (SubsetMask s = 0; s <= m1.fact.full_mask(); ++s)
        table.values[s] = unitary_enum_subset(m1, m2, s, kind);
    return table;
}

/// Unprimed table (A or B) derived from the matching primed table.
template <class R>
SubsetEnumTable<R> unprimed_table(const SubsetEnumTable<R>& primed) {
    if (primed.kind != EnumKind::APrime && primed.kind != EnumKind::BPrime)
        throw std::invalid_argument("unprimed_table expects a primed table");
    SubsetEnumTable<R> out{primed.fact, primed.kind == EnumKind::APrime ? EnumKind::A : EnumKind::B, {}};
    for (const auto& [s, _] : primed.values) out.values[s] = unprime_subset(primed, s);
    return out;
}

template <class R>
WeightDistribution<R> subset_to_weight(const SubsetEnumTable<R>& table) {
    for (int d : table.fact.dims)
        if (d != table.fact.dims[0])
            throw std::invalid_argument(
                "weight aggregation requires equal block dimensions");
    WeightDistribution<R> out{table.kind, std::vector<R>(table.fact.n() + 1, R{})};
    for (const auto& [s, v] : table.values) out.coeffs[popcount(s)] += v;
    return out;
}

/// All four weight distributions of a code, from the factored primed tables.
template <class S>
struct EnumSet {
    using R = typename ScalarTraits<S>::Real;
    SubsetEnumTable<R> aprime, bprime, a, b;
    WeightDistribution<R> wa, wb, waprime, wbprime;
};

template <class S>
EnumSet<S> enumerate_code(const CodeStates<S>& code) {
    EnumSet<S> e;
    e.aprime = primed_table_factored(code, EnumKind::APrime);
    e.bprime = primed_table_factored(code, EnumKind::BPrime);
    e.a = unprimed_table(e.aprime);
    e.b = unprimed_table(e.bprime);
    bool equal_dims = true;
    for (int d : code.fact.dims) equal_dims = equal_dims && d == code.fact.dims[0];
    if (equal_dims) {
        e.waprime = subset_to_weight(e.aprime);
        e.wbprime = subset_to_weight(e.bprime);
        e.wa = subset_to_weight(e.a);
        e.wb = subset_to_weight(e.b);
    }
    return e;
}

/// Residual report for the subset-sum identities linking the primed and
/// unprimed families (qubit special case and the general-D form).
struct ConversionReport {
    double max_residual = 0.0;
    int checks = 0;
    std::vector<std::string> failures;
};

template <class S>
ConversionReport conversion_check(const Op<S>& m1, const Op<S>& m2, double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    ConversionReport rep;
    auto note = [&](SubsetMask s, const char* what, const R& lhs, const R& rhs) {
        double resid = std::abs(T::real_to_double(lhs) - T::real_to_double(rhs));
        rep.max_residual = std::max(rep.max_residual, resid);
        ++rep.checks;
        bool ok;
        if constexpr (T::is_exact)
            ok = lhs == rhs;
        else
            ok = resid <= tol * std::max(1.0, std::abs(T::real_to_double(rhs)));
        if (!ok)
            rep.failures.push_back(std::string(what) + " at subset {" +
                                   [&] {
                                       std::string t;
                                       for (int i : mask_to_indices(s)) t += std::to_string(i) + " ";
                                       return t;
                                   }() +
                                   "}");
    };
    const Factorization& fact = m1.fact;
    bool qubits = true;
    for (int d : fact.dims) qubits = qubits && d == 2;
    for (SubsetMask s = 0; s <= fact.full_mask(); ++s) {
        // general-D both directions (subset-sum and its Möbius inverse)
        R lhs = unitary_enum_subset(m1, m2, s, EnumKind::APrime) * R(fact.subset_dim(s));
        R rhs{};
        for_each_submask(s, [&](SubsetMask t) { rhs += sl_enum_subset(m1, m2, t, EnumKind::A); });
        note(s, "dim(V_S) A'_S = sum A_T", lhs, rhs);

        R lhs_b = unitary_enum_subset(m1, m2, s, EnumKind::BPrime) * R(fact.subset_dim(s));
        R rhs_b{};
        for_each_submask(s, [&](SubsetMask t) { rhs_b += sl_enum_subset(m1, m2, t, EnumKind::B); });
        note(s, "dim(V_S) B'_S = sum B_T", lhs_b, rhs_b);

        if (qubits) {
            // qubit route: A_T by direct Pauli sums
            R pauli_sum{};
            for_each_submask(s, [&](SubsetMask t) { pauli_sum += T::real(pauli_enum_A(m1, m2, t)); });
            note(s, "2^{|S|} A'_S = sum Pauli A_T", lhs, pauli_sum);
        }
    }
    return rep;
}

}  // namespace qwe
