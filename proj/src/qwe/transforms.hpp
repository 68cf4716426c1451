#pragma once

#include <stdexcept>
#include <vector>

#include "qwe/hilbert.hpp"

namespace qwe {

/// Apply a unitary acting on a single factor (1-based index) to every
/// codeword.  An equivalence move: enumerators must be unchanged.
template <class S>
CodeStates<S> apply_unitary_to_factor(const CodeStates<S>& code, int factor,
                                      const Matrix<S>& u) {
    if (factor < 1 || factor > code.fact.n())
        throw std::invalid_argument("factor index out of range");
    int d = code.fact.dims[factor - 1];
    if (static_cast<int>(u.rows()) != d || static_cast<int>(u.cols()) != d)
        throw std::invalid_argument("unitary does not match factor dimension");
    long pre = 1, post = 1;
    for (int j = 0; j < factor - 1; ++j) pre *= code.fact.dims[j];
    for (int j = factor; j < code.fact.n(); ++j) post *= code.fact.dims[j];
    CodeStates<S> out = code;
    for (auto& col : out.columns) {
        std::vector<S> next(col.size(), S{});
        for (long p = 0; p < pre; ++p)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const S& uab = u(a, b);
                    if (ScalarTraits<S>::is_exact && ScalarTraits<S>::abs2(uab) == 0) continue;
                    for (long q = 0; q < post; ++q)
                        next[(p * d + a) * post + q] += uab * col[(p * d + b) * post + q];
                }
        col = std::move(next);
    }
    return out;
}

/// Permute the factors: perm[i] (0-based) is the source factor placed at
/// position i.
template <class S>
CodeStates<S> permute_factors(const CodeStates<S>& code, const std::vector<int>& perm) {
    int n = code.fact.n();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("bad permutation length");
    std::vector<int> new_dims(n);
    for (int i = 0; i < n; ++i) new_dims[i] = code.fact.dims[perm[i]];
    Factorization new_fact(new_dims);
    CodeStates<S> out;
    out.fact = new_fact;
    out.norm2 = code.norm2;
    long total = code.fact.total_dim();
    for (const auto& col : code.columns) {
        std::vector<S> next(total, S{});
        for (long idx = 0; idx < total; ++idx) {
            // digits of idx in the old factorization
            long rem = idx, nidx = 0;
            std::vector<int> digit(n);
            for (int i = 0; i < n; ++i) {
                long st = code.fact.stride(i);
                digit[i] = static_cast<int>(rem / st);
                rem %= st;
            }
            for (int i = 0; i < n; ++i) nidx += digit[perm[i]] * new_fact.stride(i);
            next[nidx] = col[idx];
        }
        out.columns.push_back(std::move(next));
    }
    return out;
}

/// Move one factor to the front, keeping the relative order of the others.
template <class S>
CodeStates<S> bring_factor_front(const CodeStates<S>& code, int factor) {
    if (factor < 1 || factor > code.fact.n())
        throw std::invalid_argument("factor index out of range");
    std::vector<int> perm;
    perm.push_back(factor - 1);
    for (int i = 0; i < code.fact.n(); ++i)
        if (i != factor - 1) perm.push_back(i);
    return permute_factors(code, perm);
}

}  // namespace qwe
