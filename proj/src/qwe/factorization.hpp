#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwe {

/// Subsets of {1..n} as bitmasks; bit (i-1) set means factor i is in S.
using SubsetMask = std::uint32_t;

inline int popcount(SubsetMask s) { return std::popcount(s); }

/// Tensor factorization V = V_1 x ... x V_n with dim(V_i) = dims[i-1].
/// Index convention: row-major mixed radix, factor 1 most significant.
struct Factorization {
    std::vector<int> dims;

    Factorization() = default;
    explicit Factorization(std::vector<int> d) : dims(std::move(d)) {
        if (dims.empty()) throw std::invalid_argument("factorization needs n >= 1 factors");
        for (int di : dims)
            if (di < 2) throw std::invalid_argument("factor dimensions must be >= 2");
        if (dims.size() > 20) throw std::invalid_argument("too many factors");
    }

    int n() const { return static_cast<int>(dims.size()); }

    long total_dim() const {
        long t = 1;
        for (int d : dims) t *= d;
        return t;
    }

    SubsetMask full_mask() const { return (SubsetMask(1) << n()) - 1; }

    SubsetMask complement(SubsetMask s) const { return full_mask() & ~s; }

    void check_subset(SubsetMask s) const {
        if (s & ~full_mask()) throw std::invalid_argument("subset references factors beyond n");
    }

    long subset_dim(SubsetMask s) const {
        check_subset(s);
        long t = 1;
        for (int i = 0; i < n(); ++i)
            if (s >> i & 1) t *= dims[i];
        return t;
    }

    /// Sub-factorization restricted to the factors in s (increasing order).
    Factorization restrict_to(SubsetMask s) const {
        check_subset(s);
        std::vector<int> d;
        for (int i = 0; i < n(); ++i)
            if (s >> i & 1) d.push_back(dims[i]);
        return Factorization(std::move(d));
    }

    /// Stride of factor i (0-based) in the row-major index.
    long stride(int i) const {
        long t = 1;
        for (int j = i + 1; j < n(); ++j) t *= dims[j];
        return t;
    }

    /// Base offsets of all digit assignments to the factors in mask,
    /// enumerated mixed-radix with the lowest-index factor most significant.
    /// A full index splits as offsets(S)[a] + offsets(S^c)[b].
    std::vector<long> subset_offsets(SubsetMask mask) const {
        check_subset(mask);
        std::vector<long> offs{0};
        for (int i = 0; i < n(); ++i) {
            if (!(mask >> i & 1)) continue;
            long st = stride(i);
            std::vector<long> next;
            next.reserve(offs.size() * dims[i]);
            for (long base : offs)
                for (int d = 0; d < dims[i]; ++d) next.push_back(base + d * st);
            offs = std::move(next);
        }
        return offs;
    }

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.dims == b.dims;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
        return s + "]";
    }
};

/// All subsets of {1..n}, ordered by increasing popcount then numeric value.
/// This is the canonical iteration/reporting order artifact-wide.
inline std::vector<SubsetMask> all_subsets_sorted(int n) {
    std::vector<SubsetMask> subs(std::size_t(1) << n);
    std::iota(subs.begin(), subs.end(), 0u);
    std::stable_sort(subs.begin(), subs.end(), [](SubsetMask a, SubsetMask b) {
        return popcount(a) < popcount(b);
    });
    return subs;
}

/// All subsets of fixed size k, in increasing numeric order.
inline std::vector<SubsetMask> subsets_of_size(int n, int k) {
    std::vector<SubsetMask> out;
    for (SubsetMask s = 0; s < (SubsetMask(1) << n); ++s)
        if (popcount(s) == k) out.push_back(s);
    return out;
}

/// Invoke f(sub) for every subset of mask, including empty and mask itself.
template <class F>
void for_each_submask(SubsetMask mask, F&& f) {
    SubsetMask sub = mask;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
    }
}

/// Subset rendered as a sorted 1-based index list, e.g. {1,3}.
inline std::vector<int> mask_to_indices(SubsetMask s) {
    std::vector<int> idx;
    for (int i = 0; s >> i; ++i)
        if (s >> i & 1) idx.push_back(i + 1);
    return idx;
}

inline SubsetMask indices_to_mask(const std::vector<int>& idx, int n) {
    SubsetMask s = 0;
    for (int i : idx) {
        if (i < 1 || i > n) throw std::invalid_argument("factor index out of range: " + std::to_string(i));
        s |= SubsetMask(1) << (i - 1);
    }
    return s;
}

}  // namespace qwe
