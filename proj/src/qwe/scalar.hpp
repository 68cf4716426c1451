#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qwe {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Absolute tolerance used for every float-backend entrywise check.
inline constexpr double kTol = 1e-9;

/// Exact complex scalar a + b*i with rational a, b.
struct GRat {
    Rational re;
    Rational im;

    GRat() = default;
    GRat(Rational r) : re(std::move(r)) {}
    GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GRat(long r) : re(r) {}
    GRat(long r, long i) : re(r), im(i) {}

    static GRat i() { return GRat(0, 1); }

    GRat operator-() const { return GRat(-re, -im); }
    GRat conj() const { return GRat(re, -im); }
    Rational norm2() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GRat& operator/=(const GRat& o) {
        Rational n = o.norm2();
        if (n == 0) throw std::domain_error("GRat: division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
    friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

inline std::complex<double> to_complex(const GRat& x) {
    return {static_cast<double>(x.re), static_cast<double>(x.im)};
}
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

/// Exact square root of a nonnegative rational, if it is a perfect square.
/// Returns false otherwise.
inline bool rational_sqrt(const Rational& x, Rational& out) {
    if (x < 0) return false;
    BigInt num = numerator(x), den = denominator(x);
    BigInt rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return false;
    out = Rational(rn, rd);
    return true;
}

inline std::string rational_str(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Rational parse_rational(const std::string& s) {
    auto integer = [&](const std::string& part) {
        try {
            return BigInt(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rational: " + s);
        }
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer(s));
    BigInt num = integer(s.substr(0, slash)), den = integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

// Traits shared by the two scalar backends.  RealT is the matching real
// scalar (Rational or double); is_exact selects equality vs tolerance
// semantics throughout the library.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<GRat> {
    using Real = Rational;
    static constexpr bool is_exact = true;
    static GRat conj(const GRat& x) { return x.conj(); }
    static Real real(const GRat& x) { return x.re; }
    static Real imag(const GRat& x) { return x.im; }
    static Real abs2(const GRat& x) { return x.norm2(); }
    static GRat from_real(Real r) { return GRat(std::move(r)); }
    static GRat from_int(long v) { return GRat(v); }
    static double real_to_double(const Real& r) { return static_cast<double>(r); }
    static bool is_zero(const GRat& x, double = 0.0) { return x.is_zero(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
    using Real = double;
    static constexpr bool is_exact = false;
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static Real real(const std::complex<double>& x) { return x.real(); }
    static Real imag(const std::complex<double>& x) { return x.imag(); }
    static Real abs2(const std::complex<double>& x) { return std::norm(x); }
    static std::complex<double> from_real(Real r) { return {r, 0.0}; }
    static std::complex<double> from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static double real_to_double(const Real& r) { return r; }
    static bool is_zero(const std::complex<double>& x, double tol = kTol) {
        return std::abs(x) <= tol;
    }
};

using CF = std::complex<double>;

}  // namespace qwe
