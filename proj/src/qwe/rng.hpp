#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qwe/matrix.hpp"

namespace qwe {

/// Deterministic random stream.  Uniform and Gaussian variates are derived
/// from raw mt19937_64 output with fixed arithmetic, so identical seeds give
/// identical streams regardless of standard-library distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound).
    long uniform_int(long bound) { return static_cast<long>(uniform() * bound); }

    /// Standard normal via Box-Muller.
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    CF complex_gauss() { return {gauss(), gauss()}; }

    Matrix<CF> ginibre(std::size_t rows, std::size_t cols) {
        Matrix<CF> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex_gauss();
        return m;
    }

    Matrix<CF> random_hermitian(std::size_t d) {
        auto g = ginibre(d, d);
        auto h = g + g.adjoint();
        return h * CF(0.5, 0.0);
    }

    /// G G† for complex Gaussian G with the given column count: PSD of
    /// rank min(d, cols) almost surely.
    Matrix<CF> random_psd(std::size_t d, std::size_t cols) {
        auto g = ginibre(d, cols);
        return g * g.adjoint();
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qwe
