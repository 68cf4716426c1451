#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qwe/analysis.hpp"
#include "qwe/transforms.hpp"

namespace qwe {

struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shorten a pure ((n,K,d)) with n,d >= 2 by tracing out one factor:
/// P' = D Tr_{factor}(P) projects onto a pure ((n-1,DK,d-1)).
/// The projector property of P' and the intermediate enumerator identity
/// B'_{S u {1}}(P) = D^{1-d} K for |S| = d-2 are asserted, not assumed.
template <class S>
CodeStates<S> shorten(const CodeStates<S>& code, int factor = 1, double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    int n = code.fact.n();
    if (n < 2) throw ConstructionError("shorten needs n >= 2");
    for (int d : code.fact.dims)
        if (d != code.fact.dims[0]) throw ConstructionError("shorten needs equal block dimensions");
    CodeStates<S> front = factor == 1 ? code : bring_factor_front(code, factor);
    int block = front.fact.dims[0];
    int kdim = front.dim_code();

    auto enums = enumerate_code(front);
    auto dist = certify_distance(enums, kdim, tol);
    if (dist.d < 2) throw ConstructionError("shorten needs distance >= 2");
    if (!check_purity(enums, dist, tol)) throw ConstructionError("shorten requires a pure code");

    // intermediate identity from the shortening argument
    R expect = R(kdim);
    for (int i = 0; i < dist.d - 1; ++i) expect /= R(block);
    for (SubsetMask rest : subsets_of_size(n, dist.d - 2)) {
        if (rest & 1) continue;  // S ranges over {2..n}
        SubsetMask s = rest | 1;
        R got = enums.bprime.values.at(s);
        if (!values_equal<T>(got, expect, tol))
            throw ConsistencyError("shortening identity B'_{S u {1}} = D^{1-d} K violated");
    }

    Op<S> p = front.projector();
    Op<S> traced = partial_trace(p, SubsetMask(1));
    S scale = T::from_int(block);
    for (std::size_t r = 0; r < traced.mat.rows(); ++r)
        for (std::size_t c = 0; c < traced.mat.cols(); ++c) traced.mat(r, c) *= scale;

    R tr = T::real(traced.mat.trace());
    R tr2 = T::real((traced.mat * traced.mat).trace());
    if (!values_equal<T>(tr, R(block * kdim), tol) || !values_equal<T>(tr2, tr, tol))
        throw ConsistencyError("shortened operator is not a projection of rank D*K");

    return codewords_from_projector(traced, block * kdim, tol);
}

/// Rank-D extension: given a code with projector of rank D, build the
/// rank-1 code on one extra (prepended) dim-D factor spanned by
/// v' = sum_i D^{-1/2} w_i (x) v_i.  Asserts D Tr_{1}(P') = P and the
/// enumerator relation A'_i(C') = D^{-2}(A'_i(C) + B'_{i-1}(C)).
template <class S>
CodeStates<S> extend(const CodeStates<S>& code, double tol = kTol) {
    using T = ScalarTraits<S>;
    using R = typename T::Real;
    int block = code.dim_code();
    if (block < 2) throw ConstructionError("extend needs rank >= 2 (rank = new factor dimension)");
    for (int d : code.fact.dims)
        if (d != block)
            throw ConstructionError("extend needs rank equal to the block dimension");
    // equal norms let the exact backend skip the irrational 1/sqrt(D)
    CodeStates<S> base = code;
    bool equal_norms = true;
    for (const auto& n2 : code.norm2) equal_norms = equal_norms && n2 == code.norm2[0];
    if (!equal_norms) base = code.normalized();

    long d_in = code.fact.total_dim();
    std::vector<int> dims{block};
    dims.insert(dims.end(), code.fact.dims.begin(), code.fact.dims.end());
    CodeStates<S> out;
    out.fact = Factorization(dims);
    std::vector<S> v(block * d_in, S{});
    R n2{};
    for (int i = 0; i < block; ++i) {
        for (long r = 0; r < d_in; ++r) v[i * d_in + r] = base.columns[i][r];
        n2 += base.norm2[i];
    }
    out.columns.push_back(std::move(v));
    out.norm2.push_back(std::move(n2));

    Op<S> p_new = out.projector();
    Op<S> traced = partial_trace(p_new, SubsetMask(1));
    S scale = T::from_int(block);
    for (std::size_t r = 0; r < traced.mat.rows(); ++r)
        for (std::size_t c = 0; c < traced.mat.cols(); ++c) traced.mat(r, c) *= scale;
    if (!traced.mat.equals(base.projector().mat, tol))
        throw ConsistencyError("extend: D Tr_1(P') != P");

    bool equal_dims = true;
    for (int d : out.fact.dims) equal_dims = equal_dims && d == out.fact.dims[0];
    if (equal_dims) {
        auto before = enumerate_code(base);
        auto after = enumerate_code(out);
        R dd = R(block) * R(block);
        for (int i = 0; i <= out.fact.n(); ++i) {
            R rhs = (i <= code.fact.n() ? before.waprime.coeffs[i] : R{}) +
                    (i >= 1 ? before.wbprime.coeffs[i - 1] : R{});
            rhs /= dd;
            if (!values_equal<T>(after.waprime.coeffs[i], rhs, tol))
                throw ConsistencyError("extend: enumerator relation A'_i = D^-2 (A'_i + B'_{i-1}) violated");
        }
    }
    return out;
}

/// Encoder isometry from a dim-K space into a factored block space:
/// unit columns, E†E = 1.
template <class S>
struct Isometry {
    Factorization block_fact;
    Matrix<S> mat;  // total_dim(block_fact) x K

    int domain_dim() const { return static_cast<int>(mat.cols()); }

    void validate(double tol = kTol) const {
        using T = ScalarTraits<S>;
        if (static_cast<long>(mat.rows()) != block_fact.total_dim())
            throw ConstructionError("encoder rows do not match block dimension");
        auto gram = mat.adjoint() * mat;
        if (!gram.equals(Matrix<S>::identity(mat.cols()), tol))
            throw ConstructionError("encoder is not an isometry");
    }
};

/// Concatenation: re-encode each factor of the outer code with the inner
/// encoder.  Block i of the outer code maps to factors
/// (i-1)*n2+1 .. i*n2 of the result; K is unchanged.
template <class S>
CodeStates<S> concatenate(const CodeStates<S>& outer, const Isometry<S>& encoder,
                          double tol = kTol) {
    using T = ScalarTraits<S>;
    encoder.validate(tol);
    int n1 = outer.fact.n();
    int d1 = encoder.domain_dim();
    for (int d : outer.fact.dims)
        if (d != d1) throw ConstructionError("outer block dimension does not match encoder domain");
    long t_out = encoder.block_fact.total_dim();

    CodeStates<S> out;
    std::vector<int> dims;
    for (int i = 0; i < n1; ++i)
        dims.insert(dims.end(), encoder.block_fact.dims.begin(), encoder.block_fact.dims.end());
    out.fact = Factorization(dims);
    out.norm2 = outer.norm2;
    for (const auto& col : outer.columns) {
        std::vector<S> v = col;
        // encode axes right to left; axes left of the current one still have
        // size d1, axes to the right are already expanded to t_out
        for (int axis = n1 - 1; axis >= 0; --axis) {
            long pre = 1, post = 1;
            for (int j = 0; j < axis; ++j) pre *= d1;
            for (int j = axis + 1; j < n1; ++j) post *= t_out;
            std::vector<S> next(pre * t_out * post, S{});
            for (long p = 0; p < pre; ++p)
                for (int a = 0; a < d1; ++a) {
                    for (long q = 0; q < post; ++q) {
                        const S& amp = v[(p * d1 + a) * post + q];
                        if (T::abs2(amp) == typename T::Real{}) continue;
                        for (long t = 0; t < t_out; ++t)
                            next[(p * t_out + t) * post + q] += encoder.mat(t, a) * amp;
                    }
                }
            v = std::move(next);
        }
        out.columns.push_back(std::move(v));
    }
    return out;
}

}  // namespace qwe
