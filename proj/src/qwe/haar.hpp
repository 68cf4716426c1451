#pragma once

#include <cmath>
#include <stdexcept>

#include "qwe/enumerators.hpp"
#include "qwe/rng.hpp"

namespace qwe {

/// Modified Gram-Schmidt orthonormalization of the columns; the input must
/// have full column rank.
inline Matrix<CF> orthonormalize_columns(Matrix<CF> m) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            CF proj{};
            for (std::size_t r = 0; r < m.rows(); ++r) proj += std::conj(m(r, j)) * m(r, k);
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, k) -= proj * m(r, j);
        }
        double n2 = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) n2 += std::norm(m(r, k));
        if (n2 <= 0.0) throw std::runtime_error("rank-deficient matrix in orthonormalization");
        double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, k) *= inv;
    }
    return m;
}

/// Haar-random unitary: QR of a complex Ginibre matrix.  Gram-Schmidt yields
/// the Q factor with positive-real R diagonal, which is exactly Haar.
inline Matrix<CF> haar_unitary(std::size_t d, Rng& rng) {
    return orthonormalize_columns(rng.ginibre(d, d));
}

/// Projector onto a Haar-random k-dimensional subspace.
inline Matrix<CF> random_subspace_projector(std::size_t d, std::size_t k, Rng& rng) {
    auto q = orthonormalize_columns(rng.ginibre(d, k));
    return q * q.adjoint();
}

struct HaarEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
};

/// Monte-Carlo estimate of dim(V_S) E_{U_S}[Tr(M1 U_S) Tr(M2 U_S†)] (A')
/// or dim(V_S) E_{U_S}[Tr(M1 U_S M2 U_S†)] (B'), with U_S Haar on V_S.
inline HaarEstimate haar_oracle(const Op<CF>& m1, const Op<CF>& m2, SubsetMask s, EnumKind kind,
                                long samples, std::uint64_t seed) {
    if (!(m1.fact == m2.fact)) throw std::invalid_argument("factorization mismatch");
    if (kind != EnumKind::APrime && kind != EnumKind::BPrime)
        throw std::invalid_argument("haar_oracle handles A'/B' only");
    m1.fact.check_subset(s);
    if (s == 0) {
        // no randomness: U is the scalar 1
        double v = kind == EnumKind::APrime
                       ? (m1.mat.trace() * m2.mat.trace()).real()
                       : (m1.mat * m2.mat).trace().real();
        return {v, 0.0, samples};
    }
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    long ds = m1.fact.subset_dim(s);
    Rng rng(seed);
    double sum = 0.0, sumsq = 0.0;
    for (long k = 0; k < samples; ++k) {
        auto u = haar_unitary(ds, rng);
        Op<CF> u_full = tensor_embed(Op<CF>(m1.fact.restrict_to(s), u), s, m1.fact);
        double x;
        if (kind == EnumKind::APrime) {
            CF t1 = (m1.mat * u_full.mat).trace();
            CF t2 = (m2.mat * u_full.mat.adjoint()).trace();
            x = ds * (t1 * t2).real();
        } else {
            x = ds * (m1.mat * u_full.mat * m2.mat * u_full.mat.adjoint()).trace().real();
        }
        sum += x;
        sumsq += x * x;
    }
    double mean = sum / samples;
    double var = (sumsq - samples * mean * mean) / (samples - 1);
    return {mean, std::sqrt(std::max(0.0, var) / samples), samples};
}

}  // namespace qwe
