#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwe/polynomials.hpp"
#include "qwe/rng.hpp"

using namespace qwe;

namespace {

EnumPolynomial<Rational> poly(std::vector<long> c) {
    EnumPolynomial<Rational> p;
    for (long x : c) p.coeffs.emplace_back(x);
    return p;
}

EnumPolynomial<Rational> random_poly(Rng& rng, int n) {
    EnumPolynomial<Rational> p;
    for (int i = 0; i <= n; ++i)
        p.coeffs.emplace_back(rng.uniform_int(21) - 10);
    return p;
}

}  // namespace

TEST_CASE("substitution sanity") {
    // p(x,y) = x^2 + 2xy, substitute x -> x+y, y -> y gives x^2+2xy+y^2+2xy+2y^2
    auto p = poly({1, 2, 0});
    auto q = substitute(p, Rational(1), Rational(1), Rational(0), Rational(1));
    CHECK(q.coeffs == std::vector<Rational>{Rational(1), Rational(4), Rational(3)});

    // identity substitution
    auto r = substitute(p, Rational(1), Rational(0), Rational(0), Rational(1));
    CHECK(r.coeffs == p.coeffs);
}

TEST_CASE("macwilliams on named codes") {
    // five-qubit code: B from A and back
    auto a = poly({4, 0, 0, 0, 60, 0});
    auto b = macwilliams(a, 2);
    CHECK(b.coeffs == std::vector<Rational>{Rational(2), Rational(0), Rational(0), Rational(60),
                                            Rational(30), Rational(36)});
    // and the reverse direction: B -> A needs the same map applied to B... the
    // transform is an involution up to the K normalization, checked directly:
    auto back = macwilliams(b, 2);
    // Tr(M^2)=K, Tr(M)^2=K^2 swap roles; for K=2 the round trip halves then doubles
    CHECK(back.coeffs == std::vector<Rational>{Rational(4), Rational(0), Rational(0), Rational(0),
                                               Rational(60), Rational(0)});
}

TEST_CASE("macwilliams is an involution for any block dimension") {
    Rng rng(17);
    for (int d : {2, 3, 5}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto p = random_poly(rng, 4);
            auto twice = macwilliams(macwilliams(p, d), d);
            CHECK(twice.coeffs == p.coeffs);
        }
    }
}

TEST_CASE("primed substitutions invert each other") {
    Rng rng(23);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto p = random_poly(rng, 5);
            CHECK(from_primed(to_primed(p, d), d).coeffs == p.coeffs);
            CHECK(to_primed(from_primed(p, d), d).coeffs == p.coeffs);
        }
    }
}

TEST_CASE("bell primed and shadow polynomials") {
    // A = x^2 + 3y^2 for the Bell state; A' = A(x + y/2, y/2)
    auto a = poly({1, 0, 3});
    auto ap = to_primed(a, 2);
    CHECK(ap.coeffs == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    auto sh = shadow_poly(ap);
    CHECK(sh.coeffs == std::vector<Rational>{Rational(1), Rational(0), Rational(3)});

    CHECK(from_primed(ap, 2).coeffs == a.coeffs);
}

TEST_CASE("macwilliams commutes with the primed shuttle") {
    // B'(x,y) = A'(y,x) expressed through the unprimed transform
    Rng rng(29);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            auto a = random_poly(rng, 4);
            auto b = macwilliams(a, d);
            auto ap = to_primed(a, d);
            auto bp = to_primed(b, d);
            // swap x and y in A' and compare with B'
            auto swapped = substitute(ap, Rational(0), Rational(1), Rational(1), Rational(0));
            CHECK(swapped.coeffs == bp.coeffs);
        }
    }
}

TEST_CASE("shadow transform is an involution up to sign structure") {
    // S(x,y) = A'(x+y, y-x); applying the matching inverse recovers A'
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto ap = random_poly(rng, 4);
        auto sh = shadow_poly(ap);
        // inverse: x -> (x-y)/2 is encoded as substitute with halves
        auto back = substitute(sh, Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2));
        CHECK(back.coeffs == ap.coeffs);
    }
}

TEST_CASE("float conversion") {
    auto p = poly({1, -2, 3});
    auto f = poly_to_float(p);
    CHECK(f.coeffs == std::vector<double>{1.0, -2.0, 3.0});
}
