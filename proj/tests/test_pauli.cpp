#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwe/pauli.hpp"
#include "qwe/rng.hpp"

using namespace qwe;

namespace {

Op<GRat> bell_projector() {
    Factorization fact({2, 2});
    Matrix<GRat> p(4, 4);
    GRat half(Rational(1, 2));
    p(0, 0) = half;
    p(0, 3) = half;
    p(3, 0) = half;
    p(3, 3) = half;
    return Op<GRat>(fact, std::move(p));
}

PauliError error_from(const std::string& word) {
    PauliError e;
    for (char c : word) e.letters.push_back(letter_from_char(c));
    return e;
}

}  // namespace

TEST_CASE("letter round trip and weight") {
    PauliError e = error_from("IXYZ");
    CHECK(e.str() == "IXYZ");
    CHECK(e.weight() == 3);
    CHECK(e.support() == SubsetMask(0b1110));
    CHECK_THROWS_AS(letter_from_char('Q'), std::invalid_argument);
}

TEST_CASE("single letters as matrices") {
    Factorization f({2});
    auto x = error_from("X").to_operator<GRat>(f);
    CHECK(x.mat(0, 1) == GRat(1));
    CHECK(x.mat(1, 0) == GRat(1));
    CHECK(x.mat(0, 0) == GRat(0));

    auto y = error_from("Y").to_operator<GRat>(f);
    CHECK(y.mat(0, 1) == GRat(Rational(0), Rational(-1)));
    CHECK(y.mat(1, 0) == GRat(Rational(0), Rational(1)));

    auto z = error_from("Z").to_operator<GRat>(f);
    CHECK(z.mat(0, 0) == GRat(1));
    CHECK(z.mat(1, 1) == GRat(-1));

    for (auto* m : {&x, &y, &z}) {
        CHECK(m->mat.is_hermitian());
        CHECK((m->mat * m->mat) == Matrix<GRat>::identity(2));
    }
}

TEST_CASE("error enumeration counts") {
    Factorization f({2, 2, 2});
    long with_support = 0;
    for_each_error_with_support(f, 0b101, [&](const PauliError& e) {
        CHECK(e.support() == SubsetMask(0b101));
        ++with_support;
    });
    CHECK(with_support == 9);  // 3^2 non-identity letters on two sites

    long of_weight = 0;
    for_each_error_of_weight(f, 2, [&](const PauliError&) { ++of_weight; });
    CHECK(of_weight == 27);  // C(3,2) * 3^2

    long in_support = 0;
    for_each_error_in_support(f, 0b011, [&](const PauliError&) { ++in_support; });
    CHECK(in_support == 16);  // 4^2 including identity letters

    Factorization f3({3});
    CHECK_THROWS_AS(for_each_error_of_weight(f3, 1, [](const PauliError&) {}),
                    std::invalid_argument);
}

TEST_CASE("column action matches the dense operator") {
    Rng rng(3);
    Factorization f({2, 2, 2});
    long d = f.total_dim();
    for_each_error_of_weight(f, 2, [&](const PauliError& e) {
        auto op = e.to_operator<CF>(f);
        for (long b = 0; b < d; ++b) {
            long img;
            CF ph;
            e.column_action(b, f, img, ph);
            for (long r = 0; r < d; ++r) {
                CF want = (r == img) ? ph : CF{};
                CHECK(std::abs(op.mat(r, b) - want) < 1e-12);
            }
        }
    });
}

TEST_CASE("pauli trace matches dense trace") {
    Rng rng(5);
    Factorization f({2, 2});
    auto m = rng.ginibre(4, 4);
    for_each_error_in_support(f, f.full_mask(), [&](const PauliError& e) {
        auto op = e.to_operator<CF>(f);
        CF dense = (m * op.mat).trace();
        CF fast = pauli_trace(m, e, f);
        CHECK(std::abs(dense - fast) < 1e-10);
    });
}

TEST_CASE("Bell projector error expansion") {
    auto coeffs = expand_in_errors(bell_projector());
    GRat quarter(Rational(1, 4));
    CHECK(coeffs.at("II") == quarter);
    CHECK(coeffs.at("XX") == quarter);
    CHECK(coeffs.at("ZZ") == quarter);
    CHECK(coeffs.at("YY") == GRat(Rational(-1, 4)));
    for (const auto& [word, c] : coeffs)
        if (word != "II" && word != "XX" && word != "YY" && word != "ZZ")
            CHECK(c == GRat(0));
}

TEST_CASE("expansion reconstructs the operator") {
    Rng rng(9);
    Factorization f({2, 2});
    Op<CF> m(f, rng.random_hermitian(4));
    auto coeffs = expand_in_errors(m);
    Matrix<CF> rebuilt(4, 4);
    for (const auto& [word, c] : coeffs) {
        PauliError e = error_from(word);
        rebuilt += e.to_operator<CF>(f).mat * c;
    }
    CHECK(rebuilt.max_abs_diff(m.mat) < 1e-9);
}

TEST_CASE("pauli A and B sums against direct operator formulas") {
    Rng rng(13);
    Factorization f({2, 2});
    Op<CF> m1(f, rng.random_hermitian(4));
    Op<CF> m2(f, rng.random_hermitian(4));
    for (SubsetMask s = 0; s <= f.full_mask(); ++s) {
        CF a_direct{}, b_direct{};
        for_each_error_with_support(f, s, [&](const PauliError& e) {
            auto op = e.to_operator<CF>(f);
            a_direct += (m1.mat * op.mat).trace() * std::conj((m2.mat * op.mat).trace());
            b_direct += (m1.mat * op.mat * m2.mat * op.mat.adjoint()).trace();
        });
        CHECK(std::abs(pauli_enum_A(m1, m2, s) - a_direct) < 1e-9);
        CHECK(std::abs(pauli_enum_B(m1, m2, s) - b_direct) < 1e-9);
    }
}

TEST_CASE("exact pauli sums on the Bell projector") {
    auto p = bell_projector();
    // A_{{1,2}} = sum over XX,YY,ZZ etc of |Tr(PE)|^2 = 3 * (1/... )
    GRat a = pauli_enum_A(p, p, SubsetMask(0b11));
    CHECK(a == GRat(3));
    GRat a1 = pauli_enum_A(p, p, SubsetMask(0b01));
    CHECK(a1 == GRat(0));
    GRat b = pauli_enum_B(p, p, SubsetMask(0b11));
    CHECK(b == GRat(3));
}
