#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwe/hilbert.hpp"

namespace qwe {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char letter_char(PauliLetter l) { return "IXYZ"[static_cast<int>(l)]; }

inline PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I': return PauliLetter::I;
        case 'X': return PauliLetter::X;
        case 'Y': return PauliLetter::Y;
        case 'Z': return PauliLetter::Z;
        default: throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
    }
}

/// Tensor product of single-qubit Paulis over an all-qubit factorization.
struct PauliError {
    std::vector<PauliLetter> letters;

    int n() const { return static_cast<int>(letters.size()); }

    int weight() const {
        int w = 0;
        for (auto l : letters)
            if (l != PauliLetter::I) ++w;
        return w;
    }

    SubsetMask support() const {
        SubsetMask s = 0;
        for (int i = 0; i < n(); ++i)
            if (letters[i] != PauliLetter::I) s |= SubsetMask(1) << i;
        return s;
    }

    std::string str() const {
        std::string s;
        for (auto l : letters) s += letter_char(l);
        return s;
    }

    /// Monomial action: E|b> = phase(b) |permuted(b)>, iterated per factor.
    /// Index b is row-major with factor 1 most significant.
    template <class S>
    void column_action(long b, const Factorization& fact, long& image, S& phase) const {
        using T = ScalarTraits<S>;
        image = 0;
        phase = T::from_int(1);
        long rem = b;
        for (int i = 0; i < n(); ++i) {
            long st = fact.stride(i);
            int bit = static_cast<int>(rem / st);
            rem %= st;
            int out_bit = bit;
            switch (letters[i]) {
                case PauliLetter::I: break;
                case PauliLetter::X: out_bit = 1 - bit; break;
                case PauliLetter::Z:
                    if (bit) phase = -phase;
                    break;
                case PauliLetter::Y: {
                    out_bit = 1 - bit;
                    S ip;
                    if constexpr (T::is_exact)
                        ip = GRat::i();
                    else
                        ip = CF(0.0, 1.0);
                    phase *= bit ? -ip : ip;
                    break;
                }
            }
            image += out_bit * st;
        }
    }

    template <class S>
    Op<S> to_operator(const Factorization& fact) const {
        long d = fact.total_dim();
        Matrix<S> m(d, d);
        for (long b = 0; b < d; ++b) {
            long img;
            S ph;
            column_action(b, fact, img, ph);
            m(img, b) = ph;
        }
        return Op<S>(fact, std::move(m));
    }
};

inline void require_qubits(const Factorization& fact) {
    for (int d : fact.dims)
        if (d != 2)
            throw std::invalid_argument(
                "Pauli error set is defined for qubit factors only; use the "
                "partial-trace enumerator path for larger blocks");
}

/// Stream the errors with support exactly the given mask (3^|S| of them).
template <class F>
void for_each_error_with_support(const Factorization& fact, SubsetMask support, F&& f) {
    require_qubits(fact);
    fact.check_subset(support);
    std::vector<int> pos = mask_to_indices(support);
    PauliError e;
    e.letters.assign(fact.n(), PauliLetter::I);
    int k = static_cast<int>(pos.size());
    long count = 1;
    for (int i = 0; i < k; ++i) count *= 3;
    for (long code = 0; code < count; ++code) {
        long rem = code;
        for (int i = 0; i < k; ++i) {
            e.letters[pos[i] - 1] = static_cast<PauliLetter>(1 + rem % 3);
            rem /= 3;
        }
        f(e);
    }
}

/// Stream errors of fixed weight d, grouped by support subset.
template <class F>
void for_each_error_of_weight(const Factorization& fact, int d, F&& f) {
    require_qubits(fact);
    if (d < 0 || d > fact.n()) throw std::invalid_argument("weight out of range");
    for (SubsetMask s : subsets_of_size(fact.n(), d)) for_each_error_with_support(fact, s, f);
}

/// Stream errors with support contained in the given mask (4^|S| of them).
template <class F>
void for_each_error_in_support(const Factorization& fact, SubsetMask support, F&& f) {
    for_each_submask(support, [&](SubsetMask sub) { for_each_error_with_support(fact, sub, f); });
}

/// Tr(M E) without materializing E.
template <class S>
S pauli_trace(const Matrix<S>& m, const PauliError& e, const Factorization& fact) {
    S acc{};
    long d = fact.total_dim();
    for (long b = 0; b < d; ++b) {
        long img;
        S ph;
        e.column_action(b, fact, img, ph);
        acc += ph * m(b, img);
    }
    return acc;
}

/// Lemma-1 expansion coefficients c_E = 2^{-n} Tr(M E), keyed by Pauli word.
template <class S>
std::map<std::string, S> expand_in_errors(const Op<S>& m) {
    using T = ScalarTraits<S>;
    require_qubits(m.fact);
    std::map<std::string, S> coeffs;
    S scale = T::from_real(typename T::Real(1));
    for (int i = 0; i < m.fact.n(); ++i) scale /= T::from_int(2);
    for_each_error_in_support(m.fact, m.fact.full_mask(), [&](const PauliError& e) {
        S c = pauli_trace(m.mat, e, m.fact) * scale;
        if (!T::is_zero(c, 0.0)) coeffs[e.str()] = c;
    });
    return coeffs;
}

/// A_S(M1,M2) = sum over supp(E)=S of Tr(M1 E) Tr(M2 E).
template <class S>
S pauli_enum_A(const Op<S>& m1, const Op<S>& m2, SubsetMask support) {
    if (!(m1.fact == m2.fact)) throw std::invalid_argument("factorization mismatch");
    S acc{};
    for_each_error_with_support(m1.fact, support, [&](const PauliError& e) {
        acc += pauli_trace(m1.mat, e, m1.fact) * pauli_trace(m2.mat, e, m2.fact);
    });
    return acc;
}

/// B_S(M1,M2) = sum over supp(E)=S of Tr(M1 E M2 E).
template <class S>
S pauli_enum_B(const Op<S>& m1, const Op<S>& m2, SubsetMask support) {
    using T = ScalarTraits<S>;
    if (!(m1.fact == m2.fact)) throw std::invalid_argument("factorization mismatch");
    long d = m1.fact.total_dim();
    std::vector<long> img(d);
    std::vector<S> ph(d);
    S acc{};
    for_each_error_with_support(m1.fact, support, [&](const PauliError& e) {
        for (long b = 0; b < d; ++b) e.column_action(b, m1.fact, img[b], ph[b]);
        // Tr(M1 E M2 E) = sum_{a,b} M1[a,b] conj(p_b) p_a M2[pi(b), pi(a)]
        for (long a = 0; a < d; ++a)
            for (long b = 0; b < d; ++b) {
                const S& m1ab = m1.mat(a, b);
                if (T::is_exact && T::abs2(m1ab) == 0) continue;
                acc += m1ab * T::conj(ph[b]) * ph[a] * m2.mat(img[b], img[a]);
            }
    });
    return acc;
}

}  // namespace qwe
