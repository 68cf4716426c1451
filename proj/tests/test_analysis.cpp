#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwe/analysis.hpp"
#include "qwe/haar.hpp"
#include "qwe/rng.hpp"
#include "qwe/stabilizer.hpp"

using namespace qwe;

TEST_CASE("distance of the builtin codes") {
    struct Expect {
        const char* name;
        int d;
        bool pure;
    };
    for (Expect ex : {Expect{"bell", 2, true}, Expect{"422", 2, true}, Expect{"513", 3, true}}) {
        auto code = builtin_code(ex.name);
        auto e = enumerate_code(code);
        auto dist = certify_distance(e, code.dim_code());
        CHECK(dist.d == ex.d);
        CHECK(check_purity(e, dist) == ex.pure);
        // independent oracle: error words of weight < d must act as a scalar
        // between codewords, and weight d must not.  The scalar condition is
        // vacuous for K = 1, so the negative direction needs K >= 2.
        CHECK(knill_laflamme_check(code, dist.d));
        if (code.dim_code() >= 2) CHECK_FALSE(knill_laflamme_check(code, dist.d + 1));
    }
}

TEST_CASE("repetition code: distance 1 against bit flips only") {
    // ZZ stabilizer on 2 qubits: K=2, distinguishes nothing about phases
    auto code = parse_stabilizer("ZZ");
    auto e = enumerate_code(code);
    auto dist = certify_distance(e, code.dim_code());
    CHECK(dist.d == 1);
    CHECK(dist.witness == 1);
}

TEST_CASE("three qubit repetition code") {
    auto code = parse_stabilizer("ZZI\nIZZ");
    auto e = enumerate_code(code);
    auto dist = certify_distance(e, code.dim_code());
    CHECK(dist.d == 1);
    CHECK(knill_laflamme_check(code, 1));
    CHECK_FALSE(knill_laflamme_check(code, 2));
}

TEST_CASE("ghz state distance") {
    // GHZ = stabilizer state XXX, ZZI, IZZ; weight-1 Z errors are detectable
    // but A_1 = 0 < A_2, so pure distance 2 with K = 1
    auto code = parse_stabilizer("XXX\nZZI\nIZZ");
    CHECK(code.dim_code() == 1);
    auto e = enumerate_code(code);
    auto dist = certify_distance(e, code.dim_code());
    CHECK(dist.d == 2);
    CHECK(check_purity(e, dist));
}

TEST_CASE("erasure report for the five qubit code") {
    auto code = builtin_code("513");
    auto e = enumerate_code(code);
    auto rep = erasure_report(e, code.dim_code(), 5);
    for (const auto& [s, ok] : rep) {
        if (popcount(s) <= 2)
            CHECK(ok);
        else
            CHECK_FALSE(ok);
    }
    // capped report only covers small subsets
    auto capped = erasure_report(e, code.dim_code(), 1);
    CHECK(capped.size() == 6u);
}

TEST_CASE("erasure report for the 422 code") {
    auto code = builtin_code("422");
    auto e = enumerate_code(code);
    auto rep = erasure_report(e, code.dim_code(), 4);
    for (const auto& [s, ok] : rep) {
        // distance 2: detects one error, corrects one erasure
        if (popcount(s) <= 1)
            CHECK(ok);
        else
            CHECK_FALSE(ok);
    }
}

TEST_CASE("inequality audit on stabilizer codes is tight and nonnegative") {
    for (const char* name : {"bell", "422", "513"}) {
        auto code = builtin_code(name);
        auto e = enumerate_code(code);
        auto audit = audit_inequalities(e, code.dim_code());
        CHECK(audit.ok());
        CHECK(audit.min_value >= 0.0);
        if (code.dim_code() == 1) CHECK(audit.max_k1_gap == 0.0);
    }
}

TEST_CASE("inequality audit on random subspace projectors") {
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> dims;
        int n = 2 + static_cast<int>(rng.uniform_int(2));
        for (int i = 0; i < n; ++i) dims.push_back(2 + static_cast<int>(rng.uniform_int(2)));
        Factorization f(dims);
        long total = f.total_dim();
        int k = 1 + static_cast<int>(rng.uniform_int(std::min<long>(4, total - 1)));
        auto proj = random_subspace_projector(total, k, rng);
        auto code = codewords_from_projector(Op<CF>(f, proj), k);
        auto e = enumerate_code(code);
        auto audit = audit_inequalities(e, k);
        CHECK(audit.ok(1e-7));
    }
}

TEST_CASE("values_equal semantics") {
    CHECK(values_equal<ScalarTraits<CF>>(1.0, 1.0 + 1e-12, 1e-9));
    CHECK_FALSE(values_equal<ScalarTraits<CF>>(1.0, 1.1, 1e-9));
    // scale aware: large values compare relatively
    CHECK(values_equal<ScalarTraits<CF>>(1e6, 1e6 + 1e-4, 1e-9));
    CHECK(values_equal<ScalarTraits<GRat>>(Rational(1, 3), Rational(1, 3), 1e-9));
    CHECK_FALSE(values_equal<ScalarTraits<GRat>>(Rational(1, 3), Rational(1, 2), 1e-9));
}
