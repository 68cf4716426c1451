#pragma once

#include <stdexcept>
#include <vector>

#include "qwe/scalar.hpp"

namespace qwe {

/// Homogeneous degree-n bivariate polynomial sum_d c_d x^{n-d} y^d, stored
/// densely by d.  R is Rational or double.
template <class R>
struct EnumPolynomial {
    std::vector<R> coeffs;  // length n+1

    EnumPolynomial() = default;
    explicit EnumPolynomial(std::vector<R> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("polynomial needs degree >= 0");
    }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    R eval(const R& x, const R& y) const {
        int n = degree();
        R acc{};
        for (int d = 0; d <= n; ++d) {
            R term = coeffs[d];
            for (int k = 0; k < n - d; ++k) term *= x;
            for (int k = 0; k < d; ++k) term *= y;
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const EnumPolynomial& a, const EnumPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
};

/// p(x,y) -> p(a x + b y, c x + d y), exact binomial-convolution expansion.
template <class R>
EnumPolynomial<R> substitute(const EnumPolynomial<R>& p, const R& a, const R& b, const R& c,
                             const R& d) {
    int n = p.degree();
    // binom[k][j] up to n
    std::vector<std::vector<R>> binom(n + 1, std::vector<R>(n + 1, R{}));
    for (int k = 0; k <= n; ++k) {
        binom[k][0] = R(1);
        for (int j = 1; j <= k; ++j)
            binom[k][j] = binom[k - 1][j - 1] + (j <= k - 1 ? binom[k - 1][j] : R{});
    }
    auto power_coeffs = [&](const R& u, const R& v, int k) {
        // coefficients of (u x + v y)^k by y-degree
        std::vector<R> out(k + 1, R{});
        for (int j = 0; j <= k; ++j) {
            R term = binom[k][j];
            for (int t = 0; t < k - j; ++t) term *= u;
            for (int t = 0; t < j; ++t) term *= v;
            out[j] = term;
        }
        return out;
    };
    std::vector<R> result(n + 1, R{});
    for (int deg = 0; deg <= n; ++deg) {
        bool zero;
        if constexpr (std::is_same_v<R, Rational>)
            zero = p.coeffs[deg] == 0;
        else
            zero = p.coeffs[deg] == R{};
        if (zero) continue;
        auto first = power_coeffs(a, b, n - deg);
        auto second = power_coeffs(c, d, deg);
        for (int i = 0; i <= n - deg; ++i)
            for (int j = 0; j <= deg; ++j) result[i + j] += p.coeffs[deg] * first[i] * second[j];
    }
    return EnumPolynomial<R>(std::move(result));
}

/// A'(x,y) = A(x + y/D, y/D).
template <class R>
EnumPolynomial<R> to_primed(const EnumPolynomial<R>& p, int block_dim) {
    if (block_dim < 2) throw std::invalid_argument("block dimension must be >= 2");
    R invd = R(1) / R(block_dim);
    return substitute(p, R(1), invd, R(0), invd);
}

/// A(x,y) = A'(x - y, D y); inverse of to_primed.
template <class R>
EnumPolynomial<R> from_primed(const EnumPolynomial<R>& p, int block_dim) {
    if (block_dim < 2) throw std::invalid_argument("block dimension must be >= 2");
    return substitute(p, R(1), R(-1), R(0), R(block_dim));
}

/// MacWilliams: A(x,y) = B((x + (D^2-1) y)/D, (x - y)/D).  Applying it twice
/// returns the original polynomial.
template <class R>
EnumPolynomial<R> macwilliams(const EnumPolynomial<R>& p, int block_dim) {
    if (block_dim < 2) throw std::invalid_argument("block dimension must be >= 2");
    R invd = R(1) / R(block_dim);
    R beta = R(block_dim * block_dim - 1) * invd;
    return substitute(p, invd, beta, invd, R(-1) * invd);
}

/// Shadow polynomial S(x,y) = A'(x + y, y - x).
template <class R>
EnumPolynomial<R> shadow_poly(const EnumPolynomial<R>& aprime) {
    return substitute(aprime, R(1), R(1), R(-1), R(1));
}

template <class R>
EnumPolynomial<double> poly_to_float(const EnumPolynomial<R>& p) {
    std::vector<double> c;
    for (const auto& x : p.coeffs) c.push_back(static_cast<double>(x));
    return EnumPolynomial<double>(std::move(c));
}

}  // namespace qwe
