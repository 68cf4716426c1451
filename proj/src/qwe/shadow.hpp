#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwe/enumerators.hpp"
#include "qwe/rng.hpp"

namespace qwe {

/// Sign convention for the subset shadow sum.  Definition uses
/// (-1)^{|R cap T^c|}; the displayed conjecture uses (-1)^{|R cap T|},
/// which is the same family under T <-> T^c.  Both are exposed so the
/// relabeling can be tested rather than assumed.
enum class ShadowConvention { Definition, Conjecture };

template <class S>
typename ScalarTraits<S>::Real shadow_subset(const Op<S>& m, const Op<S>& n, SubsetMask t,
                                             ShadowConvention conv = ShadowConvention::Definition) {
    using R = typename ScalarTraits<S>::Real;
    if (!(m.fact == n.fact)) throw std::invalid_argument("factorization mismatch");
    m.fact.check_subset(t);
    SubsetMask sign_set = conv == ShadowConvention::Definition ? m.fact.complement(t) : t;
    R acc{};
    for (SubsetMask r = 0; r <= m.fact.full_mask(); ++r) {
        R v = unitary_enum_subset(m, n, r, EnumKind::APrime);
        if (popcount(r & sign_set) % 2)
            acc -= v;
        else
            acc += v;
    }
    return acc;
}

/// Shadow table from a precomputed A' table (all 2^n values reused).
template <class R>
R shadow_subset_from_table(const SubsetEnumTable<R>& aprime, SubsetMask t,
                           ShadowConvention conv = ShadowConvention::Definition) {
    SubsetMask sign_set =
        conv == ShadowConvention::Definition ? aprime.fact.complement(t) : t;
    R acc{};
    for (const auto& [r, v] : aprime.values) {
        if (popcount(r & sign_set) % 2)
            acc -= v;
        else
            acc += v;
    }
    return acc;
}

struct FuzzRecord {
    std::uint64_t seed = 0;
    long trial = 0;
    std::vector<int> dims;
    int rank_m = 0, rank_n = 0;
    double min_shadow = 0.0;
    SubsetMask argmin_t = 0;
    bool flagged = false;          // below -float_tol, suspicious
    bool exact_violation = false;  // confirmed negative on the exact backend
};

/// Random PSD pairs on random small factorizations; evaluates S_T for all T
/// and records the minimum.  Float negatives below -1e-7 are re-adjudicated
/// exactly (doubles are rationals, so the resampled Ginibre factors convert
/// losslessly) before being reported as violations.
inline std::vector<FuzzRecord> fuzz_conjecture(int max_n, int max_d, long trials,
                                               std::uint64_t seed, double flag_tol = 1e-7) {
    if (max_n < 1 || max_n > 4) throw std::invalid_argument("fuzz is desk-scale: 1 <= max_n <= 4");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    std::vector<FuzzRecord> records;
    records.reserve(trials);
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(seed + static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ull);
        int n = 1 + static_cast<int>(rng.uniform_int(max_n));
        std::vector<int> dims(n);
        for (auto& d : dims) d = 2 + static_cast<int>(rng.uniform_int(max_d - 1));
        Factorization fact(dims);
        long dim = fact.total_dim();
        long rank_m = 1 + rng.uniform_int(dim);
        long rank_n = 1 + rng.uniform_int(dim);
        auto gm = rng.ginibre(dim, rank_m);
        auto gn = rng.ginibre(dim, rank_n);
        Op<CF> m(fact, gm * gm.adjoint());
        Op<CF> nn(fact, gn * gn.adjoint());
        auto aprime = primed_table_dense(m, nn, EnumKind::APrime);
        FuzzRecord rec;
        rec.seed = seed;
        rec.trial = trial;
        rec.dims = dims;
        rec.rank_m = static_cast<int>(rank_m);
        rec.rank_n = static_cast<int>(rank_n);
        bool first = true;
        for (SubsetMask t = 0; t <= fact.full_mask(); ++t) {
            double v = shadow_subset_from_table(aprime, t);
            if (first || v < rec.min_shadow) {
                rec.min_shadow = v;
                rec.argmin_t = t;
                first = false;
            }
        }
        rec.flagged = rec.min_shadow < -flag_tol;
        if (rec.flagged) {
            // exact re-check of the flagged subset
            Matrix<GRat> egm(dim, rank_m), egn(dim, rank_n);
            for (long r = 0; r < dim; ++r) {
                for (long c = 0; c < rank_m; ++c)
                    egm(r, c) = GRat(Rational(gm(r, c).real()), Rational(gm(r, c).imag()));
                for (long c = 0; c < rank_n; ++c)
                    egn(r, c) = GRat(Rational(gn(r, c).real()), Rational(gn(r, c).imag()));
            }
            Op<GRat> em(fact, egm * egm.adjoint());
            Op<GRat> en(fact, egn * egn.adjoint());
            Rational exact = shadow_subset(em, en, rec.argmin_t);
            rec.exact_violation = exact < 0;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace qwe
