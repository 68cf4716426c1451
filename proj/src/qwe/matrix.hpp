#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qwe/scalar.hpp"

namespace qwe {

/// Dense row-major matrix over either scalar backend.  Dimensions at play
/// are small (total Hilbert dimension up to ~1024), so no attempt is made
/// at blocking or BLAS dispatch.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, S{}) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::from_int(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (ScalarTraits<S>::is_exact && ScalarTraits<S>::abs2(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    Matrix adjoint() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = ScalarTraits<S>::conj((*this)(i, j));
        return out;
    }

    S trace() const {
        assert(rows_ == cols_);
        S t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// max_ij |a_ij - b_ij| as a double, for tolerance checks.
    double max_abs_diff(const Matrix& o) const {
        check_same_shape(o);
        double m = 0.0;
        for (std::size_t k = 0; k < data_.size(); ++k) {
            auto d = to_complex(data_[k]) - to_complex(o.data_[k]);
            m = std::max(m, std::abs(d));
        }
        return m;
    }

    bool equals(const Matrix& o, double tol = kTol) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        if constexpr (ScalarTraits<S>::is_exact) return data_ == o.data_;
        return max_abs_diff(o) <= tol;
    }

    bool is_hermitian(double tol = kTol) const { return equals(adjoint(), tol); }
    bool is_projector(double tol = kTol) const {
        return is_hermitian(tol) && equals((*this) * (*this), tol);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const S& aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

template <class S>
Matrix<CF> to_float(const Matrix<S>& m) {
    Matrix<CF> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
    return out;
}

}  // namespace qwe
