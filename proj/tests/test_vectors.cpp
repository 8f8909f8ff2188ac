#include <random>

#include "doctest.h"

#include "kiss/errors.hpp"
#include "kiss/vectors.hpp"

using kiss::ExplicitVector;
using kiss::Rational;
using kiss::Surd;

TEST_SUITE("vectors") {

TEST_CASE("canonical divides out common square scale") {
    const ExplicitVector v{{2, 2}, 8};
    const auto c = v.canonical();
    CHECK(c.z == std::vector<long>{1, 1});
    CHECK(c.norm_square == 2);

    const ExplicitVector w{{5, 5, 0, 0, 0}, 50};
    CHECK(w.canonical().z == std::vector<long>{1, 1, 0, 0, 0});
    CHECK(w.canonical().norm_square == 2);

    // Already minimal: untouched.
    const ExplicitVector m{{1, 2}, 5};
    CHECK(m.canonical().z == m.z);
    CHECK(m.canonical().norm_square == 5);

    // Zero vector canonicalizes to N = 1.
    const ExplicitVector zero{{0, 0}, 9};
    CHECK(zero.canonical().norm_square == 1);
}

TEST_CASE("norm and unit check") {
    CHECK(ExplicitVector{{5, 5, 0, 0, 0}, 50}.is_unit());
    CHECK(ExplicitVector{{5, 5, 0, 0, 0}, 50}.norm2() == Rational(1));
    CHECK(!ExplicitVector{{1, 1}, 3}.is_unit());
    CHECK(ExplicitVector{{1, 1}, 3}.norm2() == Rational(2, 3));
}

TEST_CASE("inner products of lattice style vectors are exact rationals") {
    const ExplicitVector a{{5, 5, 0, 0, 0}, 50};
    const ExplicitVector b{{5, 0, 5, 0, 0}, 50};
    CHECK(kiss::inner_product(a, a) == Surd(Rational(1)));
    CHECK(kiss::inner_product(a, b) == Surd(Rational(1, 2)));
    CHECK(kiss::inner_product(a, a.negated()) == Surd(Rational(-1)));

    const ExplicitVector y0{{-1, 1, -4, -4, -4}, 50};
    const ExplicitVector y4{{4, 1, 1, -4, -4}, 50};
    CHECK(kiss::inner_product(y0, y0) == Surd(Rational(1)));
    CHECK(kiss::inner_product(y0, y4) == Surd(Rational(1, 2)));
    CHECK(kiss::inner_product(a, y0) == Surd(Rational(0)));
}

TEST_CASE("inner products across incompatible scales stay symbolic") {
    const ExplicitVector e1{{1, 0}, 1};
    const ExplicitVector diag{{1, 1}, 2};
    // (1*1 + 0*1) / sqrt(1*2) = sqrt(1/2)
    CHECK(kiss::inner_product(e1, diag) == Surd(Rational(0), Rational(1, 2), +1));

    const ExplicitVector neg{{-1, -1}, 2};
    CHECK(kiss::inner_product(e1, neg) == Surd(Rational(0), Rational(1, 2), -1));
}

TEST_CASE("inner product is scale invariant") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> coord(-6, 6);
    for (int iter = 0; iter < 200; ++iter) {
        ExplicitVector u, v;
        for (int i = 0; i < 4; ++i) {
            u.z.push_back(coord(rng));
            v.z.push_back(coord(rng));
        }
        u.norm_square = 7;
        v.norm_square = 11;
        const ExplicitVector u3{{3 * u.z[0], 3 * u.z[1], 3 * u.z[2], 3 * u.z[3]}, 9 * 7};
        CHECK(kiss::inner_product(u, v) == kiss::inner_product(u3, v));
        CHECK(kiss::same_real_vector(u, u3));
        CHECK(kiss::inner_product(u, u) == kiss::inner_product(u3, u3));
    }
}

TEST_CASE("same_real_vector is scale blind but sign sensitive") {
    const ExplicitVector a{{1, 1, 0}, 2};
    const ExplicitVector b{{2, 2, 0}, 8};
    const ExplicitVector c{{-1, -1, 0}, 2};
    CHECK(kiss::same_real_vector(a, b));
    CHECK(!kiss::same_real_vector(a, c));
    CHECK(!kiss::same_real_vector(a, ExplicitVector{{1, 1, 0}, 3}));
}

TEST_CASE("canonical_less is a strict total order consistent with equality") {
    const ExplicitVector a{{1, 0}, 1};
    const ExplicitVector b{{0, 1}, 1};
    const ExplicitVector a_scaled{{2, 0}, 4};
    CHECK(kiss::canonical_less(b, a) != kiss::canonical_less(a, b));
    CHECK(!kiss::canonical_less(a, a_scaled));
    CHECK(!kiss::canonical_less(a_scaled, a));
}

TEST_CASE("dimension mismatches are rejected") {
    const ExplicitVector a{{1, 0}, 1};
    const ExplicitVector b{{1, 0, 0}, 1};
    CHECK_THROWS_AS(kiss::inner_product(a, b), kiss::DimensionMismatch);
}

} // TEST_SUITE
