#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qwe/factorization.hpp"
#include "qwe/matrix.hpp"

namespace qwe {

/// Square operator on a factored Hilbert space.
template <class S>
struct Op {
    using value_type = S;

    Factorization fact;
    Matrix<S> mat;

    Op() = default;
    Op(Factorization f, Matrix<S> m) : fact(std::move(f)), mat(std::move(m)) {
        if (mat.rows() != mat.cols() || static_cast<long>(mat.rows()) != fact.total_dim())
            throw std::invalid_argument("operator entries must be total_dim x total_dim");
    }

    static Op identity(Factorization f) {
        auto d = f.total_dim();
        return Op(std::move(f), Matrix<S>::identity(d));
    }
};

template <class S>
Op<CF> to_float(const Op<S>& m) {
    return Op<CF>(m.fact, to_float(m.mat));
}

/// Tr_S(M): trace out the factors in traced, leaving an operator on the
/// factors of S^c in their original order.  Tr_emptyset is the identity map
/// and tracing everything yields a 1x1 operator holding Tr(M).
template <class S>
Op<S> partial_trace(const Op<S>& m, SubsetMask traced) {
    m.fact.check_subset(traced);
    SubsetMask kept = m.fact.complement(traced);
    auto off_t = m.fact.subset_offsets(traced);
    auto off_k = m.fact.subset_offsets(kept);
    long dk = static_cast<long>(off_k.size());
    Matrix<S> out(dk, dk);
    for (long r = 0; r < dk; ++r)
        for (long c = 0; c < dk; ++c) {
            S acc{};
            for (long s : off_t) acc += m.mat(s + off_k[r], s + off_k[c]);
            out(r, c) = std::move(acc);
        }
    std::vector<int> dims_kept;
    for (int i = 0; i < m.fact.n(); ++i)
        if (kept >> i & 1) dims_kept.push_back(m.fact.dims[i]);
    Op<S> result;
    if (dims_kept.empty()) {
        // full trace: 1x1 operator on the trivial (empty) factorization
        result.fact = Factorization{};
        result.mat = std::move(out);
    } else {
        result = Op<S>(Factorization(dims_kept), std::move(out));
    }
    return result;
}

/// M_S tensor 1_{S^c}: embed an operator living on the factors in s back
/// into the full space, identity elsewhere.
template <class S>
Op<S> tensor_embed(const Op<S>& m_s, SubsetMask s, const Factorization& fact) {
    fact.check_subset(s);
    if (fact.subset_dim(s) != static_cast<long>(m_s.mat.rows()))
        throw std::invalid_argument("tensor_embed: operator does not match dim(V_S)");
    SubsetMask rest = fact.complement(s);
    auto off_s = fact.subset_offsets(s);
    auto off_r = fact.subset_offsets(rest);
    Matrix<S> out(fact.total_dim(), fact.total_dim());
    for (std::size_t a = 0; a < off_s.size(); ++a)
        for (std::size_t b = 0; b < off_s.size(); ++b) {
            const S& v = m_s.mat(a, b);
            for (long r : off_r) out(off_s[a] + r, off_s[b] + r) = v;
        }
    return Op<S>(fact, std::move(out));
}

/// Tr(Tr_X(v v†) · Tr_X(w w†)) for vectors v, w, without forming any
/// dim(V_{X^c})-sized matrix: reshape into dim(V_X) x dim(V_{X^c}),
/// take the cross-Gram over the kept index, return its squared Frobenius
/// norm.  Real and nonnegative by construction.
template <class S>
typename ScalarTraits<S>::Real gram_contraction(const std::vector<S>& v, const std::vector<S>& w,
                                                SubsetMask traced, const Factorization& fact) {
    using T = ScalarTraits<S>;
    fact.check_subset(traced);
    if (v.size() != w.size() || static_cast<long>(v.size()) != fact.total_dim())
        throw std::invalid_argument("gram_contraction: vector length mismatch");
    auto off_t = fact.subset_offsets(traced);
    auto off_k = fact.subset_offsets(fact.complement(traced));
    typename T::Real total{};
    for (std::size_t s = 0; s < off_t.size(); ++s) {
        for (std::size_t t = 0; t < off_t.size(); ++t) {
            S g{};
            for (long c : off_k) {
                const S& vs = v[off_t[s] + c];
                if (T::is_exact && T::abs2(vs) == 0) continue;
                g += vs * T::conj(w[off_t[t] + c]);
            }
            total += T::abs2(g);
        }
    }
    return total;
}

/// Rank-factored code: columns span the code space.  Columns are mutually
/// orthogonal but stored unnormalized with their exact squared norms, so
/// the exact backend never needs an irrational 1/sqrt.
template <class S>
struct CodeStates {
    using value_type = S;

    Factorization fact;
    std::vector<std::vector<S>> columns;
    std::vector<typename ScalarTraits<S>::Real> norm2;

    int dim_code() const { return static_cast<int>(columns.size()); }

    void validate(double tol = kTol) const {
        using T = ScalarTraits<S>;
        if (columns.empty()) throw std::invalid_argument("code has no codewords");
        if (columns.size() != norm2.size())
            throw std::invalid_argument("codeword/norm bookkeeping mismatch");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (static_cast<long>(columns[i].size()) != fact.total_dim())
                throw std::invalid_argument("codeword length does not match total_dim");
            if (T::real_to_double(norm2[i]) <= 0)
                throw std::invalid_argument("codeword with nonpositive norm");
            for (std::size_t j = 0; j < columns.size(); ++j) {
                S inner{};
                for (long k = 0; k < fact.total_dim(); ++k)
                    inner += T::conj(columns[i][k]) * columns[j][k];
                if (i == j) {
                    if constexpr (T::is_exact) {
                        if (T::real(inner) != norm2[i] || T::imag(inner) != 0)
                            throw std::invalid_argument("stored codeword norm is wrong");
                    } else if (std::abs(to_complex(inner) - std::complex<double>(norm2[i], 0)) >
                               tol * std::max(1.0, T::real_to_double(norm2[i])))
                        throw std::invalid_argument("stored codeword norm is wrong");
                } else if (!T::is_zero(inner, tol)) {
                    throw std::invalid_argument("codewords are not orthogonal");
                }
            }
        }
    }

    /// Induced projector P = sum_i v_i v_i† / |v_i|^2.
    Op<S> projector() const {
        using T = ScalarTraits<S>;
        long d = fact.total_dim();
        Matrix<S> p(d, d);
        for (std::size_t i = 0; i < columns.size(); ++i) {
            S inv = T::from_real(norm2[i]);
            for (long r = 0; r < d; ++r) {
                if (T::is_exact && T::abs2(columns[i][r]) == 0) continue;
                for (long c = 0; c < d; ++c)
                    p(r, c) += columns[i][r] * T::conj(columns[i][c]) / inv;
            }
        }
        return Op<S>(fact, std::move(p));
    }

    /// Unit-norm columns.  On the exact backend this requires every norm^2
    /// to be a perfect rational square.
    CodeStates normalized() const {
        using T = ScalarTraits<S>;
        CodeStates out;
        out.fact = fact;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            S inv;
            if constexpr (T::is_exact) {
                Rational root;
                if (!rational_sqrt(norm2[i], root))
                    throw std::domain_error("codeword norm is not an exact rational square");
                inv = T::from_real(Rational(1) / root);
            } else {
                inv = T::from_real(1.0 / std::sqrt(norm2[i]));
            }
            auto col = columns[i];
            for (auto& x : col) x *= inv;
            out.columns.push_back(std::move(col));
            out.norm2.push_back(typename T::Real(1));
        }
        return out;
    }
};

template <class S>
CodeStates<CF> to_float(const CodeStates<S>& c) {
    CodeStates<CF> out;
    out.fact = c.fact;
    for (const auto& col : c.columns) {
        std::vector<CF> v(col.size());
        for (std::size_t k = 0; k < col.size(); ++k) v[k] = to_complex(col[k]);
        out.columns.push_back(std::move(v));
    }
    for (const auto& n : c.norm2) out.norm2.push_back(ScalarTraits<S>::real_to_double(n));
    return out;
}

/// Extract an orthogonal (unnormalized) column basis of the range of a
/// projector by Gram-Schmidt over its columns.  Works on both backends;
/// expected_rank = -1 accepts whatever rank is found.
template <class S>
CodeStates<S> codewords_from_projector(const Op<S>& p, long expected_rank = -1,
                                       double tol = kTol) {
    using T = ScalarTraits<S>;
    CodeStates<S> code;
    code.fact = p.fact;
    long d = p.fact.total_dim();
    for (long b = 0; b < d; ++b) {
        std::vector<S> w(d);
        for (long r = 0; r < d; ++r) w[r] = p.mat(r, b);
        for (std::size_t j = 0; j < code.columns.size(); ++j) {
            S inner{};
            for (long r = 0; r < d; ++r) inner += T::conj(code.columns[j][r]) * w[r];
            S coef = inner / T::from_real(code.norm2[j]);
            for (long r = 0; r < d; ++r) w[r] -= coef * code.columns[j][r];
        }
        typename T::Real n2{};
        for (const auto& x : w) n2 += T::abs2(x);
        bool nonzero;
        if constexpr (T::is_exact)
            nonzero = n2 != 0;
        else
            nonzero = n2 > tol;
        if (nonzero) {
            code.columns.push_back(std::move(w));
            code.norm2.push_back(std::move(n2));
        }
        if (expected_rank >= 0 && code.dim_code() == expected_rank) break;
    }
    if (expected_rank >= 0 && code.dim_code() != expected_rank)
        throw std::runtime_error("projector rank does not match expected code dimension");
    return code;
}

}  // namespace qwe
