#include <random>

#include "convcode/errors.hpp"
#include "convcode/poly.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace convcode;
using testutil::random_poly;

TEST_CASE("polynomial basics and normalization") {
    auto f = Field::make(3);
    CHECK(Poly(f, {1, 0, 0}) == Poly::constant(f, 1));
    CHECK(Poly(f, {0, 0}).is_zero());
    CHECK_FALSE(Poly(f).degree().has_value());
    CHECK(Poly(f).degree_or(-1) == -1);
    CHECK(Poly(f, {2, 0, 1}).degree() == 2);
    CHECK(Poly(f, {2, 0, 1}).leading_coeff() == 1);
    CHECK(Poly(f, {2, 0, 1}).constant_coeff() == 2);
    CHECK(Poly(f, {2, 0, 1}).coeff(7) == 0);
    CHECK_THROWS_AS(Poly(f).leading_coeff(), Error);
    CHECK(Poly::z(f) == Poly(f, {0, 1}));
    CHECK(Poly(f, {0, 1, 2}).weight() == 2);
}

TEST_CASE("polynomial arithmetic") {
    auto f2 = Field::make(2);
    Poly one_plus_z(f2, {1, 1});
    CHECK(one_plus_z * one_plus_z == Poly(f2, {1, 0, 1}));
    CHECK(one_plus_z + one_plus_z == Poly(f2));
    CHECK(one_plus_z.shifted(2) == Poly(f2, {0, 0, 1, 1}));

    auto f3 = Field::make(3);
    CHECK(Poly(f3, {0, 2}).monic() == Poly::z(f3));
    CHECK(Poly(f3, {1, 2}).negated() == Poly(f3, {2, 1}));
    CHECK(Poly(f3, {1, 2}).scaled(0).is_zero());

    std::mt19937_64 rng(11);
    auto f4 = Field::make(2, 2);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(rng, f4, 5), b = random_poly(rng, f4, 5), c = random_poly(rng, f4, 5);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        Elem x = static_cast<Elem>(rng() % 4);
        CHECK((a * b).eval(x) == f4->mul(a.eval(x), b.eval(x)));
        CHECK((a + b).eval(x) == f4->add(a.eval(x), b.eval(x)));
    }
}

TEST_CASE("division with remainder") {
    auto f = Field::make(5);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 300; ++t) {
        Poly a = random_poly(rng, f, 8);
        Poly b = random_poly(rng, f, 4);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree_or(-1) < *b.degree());
    }
    CHECK_THROWS_AS(Poly(f, {1}).divrem(Poly(f)), PreconditionError);
}

TEST_CASE("gcd is monic and divides") {
    auto f2 = Field::make(2);
    // 1 + z^2 = (1 + z)^2 in characteristic 2.
    CHECK(poly_gcd(Poly(f2, {1, 0, 1}), Poly(f2, {0, 1, 1})) == Poly(f2, {1, 1}));
    CHECK(poly_gcd(Poly(f2), Poly(f2)).is_zero());

    auto f3 = Field::make(3);
    CHECK(poly_gcd(Poly(f3, {0, 2}), Poly(f3)) == Poly::z(f3));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(rng, f3, 6), b = random_poly(rng, f3, 6);
        Poly g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.leading_coeff() == 1);
        CHECK(a.divrem(g).remainder.is_zero());
        CHECK(b.divrem(g).remainder.is_zero());
    }
}

TEST_CASE("field automorphisms act on polynomials") {
    auto f4 = Field::make(2, 2);
    Automorphism frob = automorphisms(f4).at(1);
    CHECK(apply_automorphism(frob, Poly(f4, {1, 2})) == Poly(f4, {1, 3}));

    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        Poly a = random_poly(rng, f4, 4), b = random_poly(rng, f4, 4);
        CHECK(apply_automorphism(frob, a * b) ==
              apply_automorphism(frob, a) * apply_automorphism(frob, b));
        CHECK(apply_automorphism(frob, a + b) ==
              apply_automorphism(frob, a) + apply_automorphism(frob, b));
        CHECK(apply_automorphism(frob, a).weight() == a.weight());
    }
}
