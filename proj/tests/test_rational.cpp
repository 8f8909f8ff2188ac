#include <random>

#include "doctest.h"

#include "kiss/errors.hpp"
#include "kiss/rational.hpp"

using kiss::Int;
using kiss::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(Int(10), Int(-4)).str() == "-5/2");
    CHECK_THROWS_AS(Rational(1, 0), kiss::ParseError);
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse(""), kiss::ParseError);
    CHECK_THROWS_AS(Rational::parse("0.5"), kiss::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), kiss::ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), kiss::ParseError);
}

TEST_CASE("arithmetic is exact and total except division by zero") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(a / Rational(0), kiss::ParseError);
    CHECK_THROWS_AS(Rational(0).inverse(), kiss::ParseError);
}

TEST_CASE("ordering matches real numbers") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 14) == Rational(1, 2));
    CHECK(Rational(2).abs() == Rational(2));
    CHECK(Rational(-2).abs() == Rational(2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("field laws hold on randomized triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 30);
    for (int iter = 0; iter < 500; ++iter) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("rational_sqrt detects perfect squares only") {
    CHECK(*kiss::rational_sqrt(Rational(4, 9)) == Rational(2, 3));
    CHECK(*kiss::rational_sqrt(Rational(0)) == Rational(0));
    CHECK(*kiss::rational_sqrt(Rational(25, 4)) == Rational(5, 2));
    CHECK(!kiss::rational_sqrt(Rational(2)));
    CHECK(!kiss::rational_sqrt(Rational(1, 3)));
    CHECK(!kiss::rational_sqrt(Rational(-4)));
}

TEST_CASE("squarefree decomposition splits off the largest square divisor") {
    SUBCASE("mixed") {
        const auto [s, k] = kiss::squarefree_decompose(Int(50));
        CHECK(s == 2);
        CHECK(k == 5);
    }
    SUBCASE("one") {
        const auto [s, k] = kiss::squarefree_decompose(Int(1));
        CHECK(s == 1);
        CHECK(k == 1);
    }
    SUBCASE("squarefree input") {
        const auto [s, k] = kiss::squarefree_decompose(Int(30));
        CHECK(s == 30);
        CHECK(k == 1);
    }
    SUBCASE("perfect square") {
        const auto [s, k] = kiss::squarefree_decompose(Int(49));
        CHECK(s == 1);
        CHECK(k == 7);
    }
    SUBCASE("cube") {
        const auto [s, k] = kiss::squarefree_decompose(Int(12));
        CHECK(s == 3);
        CHECK(k == 2);
    }
    SUBCASE("randomized reconstruction") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> dist(1, 100000);
        for (int iter = 0; iter < 300; ++iter) {
            const Int n(dist(rng));
            const auto [s, k] = kiss::squarefree_decompose(n);
            CHECK(s * k * k == n);
            bool squarefree = true;
            for (long p = 2; p * p <= 100000 && squarefree; ++p)
                if (s % (p * p) == 0) squarefree = false;
            CHECK(squarefree);
        }
    }
    CHECK_THROWS_AS(kiss::squarefree_decompose(Int(0)), kiss::ParseError);
}

} // TEST_SUITE
