#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "doctest.h"

#include "kiss/cloud.hpp"
#include "kiss/errors.hpp"

using kiss::AngleSet;
using kiss::Basis;
using kiss::Cloud;
using kiss::ExplicitVector;
using kiss::Rational;
using kiss::SpanVector;
using kiss::Surd;
using kiss::SymbolicVector;

namespace {

// Four pairwise-compatible unit rows in five coordinates, plus the unit
// normal of their span. Norm-squares 50 = 2 * 5^2 share sigma = 2; the
// perpendicular row may use a different scale (5 = 5 * 1^2).
Basis lift_basis() {
    std::vector<ExplicitVector> rows{
        ExplicitVector{{5, 5, 0, 0, 0}, 50},
        ExplicitVector{{5, 0, 5, 0, 0}, 50},
        ExplicitVector{{5, 0, 0, 5, 0}, 50},
        ExplicitVector{{5, 0, 0, 0, 5}, 50},
    };
    return Basis(std::move(rows), ExplicitVector{{-1, 1, 1, 1, 1}, 5});
}

AngleSet standard_angles() {
    return AngleSet({Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2)});
}

Basis plane_basis(std::optional<ExplicitVector> perp = std::nullopt) {
    return Basis({ExplicitVector{{1, 0, 0}, 1}, ExplicitVector{{0, 1, 0}, 1}}, std::move(perp));
}

} // namespace

TEST_SUITE("cloud") {

TEST_CASE("basis caches gram data for the lift fixture") {
    const Basis b = lift_basis();
    CHECK(b.span_dim() == 4);
    CHECK(b.coord_dim() == 5);
    CHECK(b.has_perp());
    CHECK(b.sigma() == 2);
    CHECK(b.scale_factors() == std::vector<kiss::Int>{5, 5, 5, 5});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(b.gram()(i, j) == (i == j ? Rational(1) : Rational(1, 2)));
            CHECK(b.gram_inverse()(i, j) == (i == j ? Rational(8, 5) : Rational(-2, 5)));
        }
}

TEST_CASE("basis construction rejects bad input") {
    using kiss::BasisError;
    SUBCASE("non unit row") {
        CHECK_THROWS_AS(Basis({ExplicitVector{{1, 1}, 3}}, std::nullopt), BasisError);
    }
    SUBCASE("irrational gram entry") {
        // Norm-squares 1 and 2: product not a perfect square.
        CHECK_THROWS_AS(Basis({ExplicitVector{{1, 0}, 1}, ExplicitVector{{1, 1}, 2}}, std::nullopt),
                        BasisError);
    }
    SUBCASE("incompatible rows") {
        // Inner product 8/9 > 1/2.
        CHECK_THROWS_AS(Basis({ExplicitVector{{2, 2, 1}, 9}, ExplicitVector{{2, 1, 2}, 9}},
                              std::nullopt),
                        BasisError);
    }
    SUBCASE("duplicate rows") {
        CHECK_THROWS_AS(Basis({ExplicitVector{{1, 0}, 1}, ExplicitVector{{2, 0}, 4}}, std::nullopt),
                        BasisError);
    }
    SUBCASE("dependent rows") {
        CHECK_THROWS_AS(Basis({ExplicitVector{{1, 0}, 1}, ExplicitVector{{-1, 0}, 1}}, std::nullopt),
                        BasisError);
    }
    SUBCASE("more rows than coordinates") {
        CHECK_THROWS_AS(Basis({ExplicitVector{{1}, 1}, ExplicitVector{{-1}, 1}}, std::nullopt),
                        BasisError);
    }
    SUBCASE("perpendicular row not orthogonal") {
        CHECK_THROWS_AS(plane_basis(ExplicitVector{{1, 1, 1}, 3}), BasisError);
    }
    SUBCASE("perpendicular row not unit") {
        CHECK_THROWS_AS(plane_basis(ExplicitVector{{0, 0, 2}, 2}), BasisError);
    }
    SUBCASE("empty") {
        CHECK_THROWS_AS(Basis({}, std::nullopt), BasisError);
    }
}

TEST_CASE("angle sets must be admissible and distinct") {
    const AngleSet a = standard_angles();
    CHECK(a.size() == 4);
    CHECK(a[1] == Rational(-1, 2));
    CHECK_THROWS_AS(AngleSet({Rational(3, 4)}), kiss::BasisError);
    CHECK_THROWS_AS(AngleSet({Rational(0), Rational(0)}), kiss::BasisError);
    CHECK_THROWS_AS(AngleSet({}), kiss::BasisError);
}

TEST_CASE("in-span cloud on an orthonormal plane basis") {
    const Basis b(
        {ExplicitVector{{1, 0}, 1}, ExplicitVector{{0, 1}, 1}}, std::nullopt);
    SUBCASE("angles {-1, 0} give exactly the two negated axes, in tuple order") {
        const Cloud c = build_cloud_in_span(b, AngleSet({Rational(-1), Rational(0)}));
        REQUIRE(c.size() == 2);
        CHECK(c[0].t == std::vector<Rational>{Rational(-1), Rational(0)});
        CHECK(c[1].t == std::vector<Rational>{Rational(0), Rational(-1)});
        for (const auto& m : c.members()) {
            CHECK(m.q == Rational(1));
            CHECK(m.residual == Rational(0));
            CHECK(m.s == 0);
        }
        CHECK(materialize_explicit(c[0], b).z == std::vector<long>{-1, 0});
        CHECK(materialize_explicit(c[1], b).z == std::vector<long>{0, -1});
    }
    SUBCASE("angle {0} alone gives nothing of unit length") {
        CHECK(build_cloud_in_span(b, AngleSet({Rational(0)})).size() == 0);
    }
}

TEST_CASE("lifted cloud on a plane inside three coordinates") {
    const Basis b = plane_basis(ExplicitVector{{0, 0, 1}, 1});
    const Cloud c = build_cloud_lifted(b, AngleSet({Rational(0)}));
    REQUIRE(c.size() == 2); // the zero tuple, lifted up and down
    CHECK(c[0].s == -1);
    CHECK(c[1].s == +1);
    CHECK(c[0].residual == Rational(1));
    CHECK(materialize_explicit(c[0], b).z == std::vector<long>{0, 0, -1});
    CHECK(materialize_explicit(c[1], b).z == std::vector<long>{0, 0, 1});
    CHECK(span_inner_product(c[0], c[1], b) == Surd(Rational(-1)));
}

TEST_CASE("lifted cloud requires a perpendicular row") {
    CHECK_THROWS_AS(build_cloud_lifted(plane_basis(), AngleSet({Rational(0)})),
                    kiss::BasisError);
}

TEST_CASE("tuples with quadratic form above one are discarded entirely") {
    // A = {-1} on an orthonormal plane basis: the only tuple has q = 2.
    const Basis b = plane_basis(ExplicitVector{{0, 0, 1}, 1});
    CHECK(build_cloud_lifted(b, AngleSet({Rational(-1)})).size() == 0);
    // Same on the lift fixture: q = 8/5 for the all-(-1) tuple.
    CHECK(build_cloud_lifted(lift_basis(), AngleSet({Rational(-1)})).size() == 0);
}

TEST_CASE("lift fixture cloud has 78 members and the in-span cloud 16") {
    const Basis b = lift_basis();
    const AngleSet a = standard_angles();
    const Cloud lifted = build_cloud_lifted(b, a);
    const Cloud in_span = build_cloud_in_span(b, a);
    CHECK(lifted.size() == 78);
    CHECK(in_span.size() == 16);

    std::size_t s_zero = 0, s_minus = 0, s_plus = 0;
    for (const auto& m : lifted.members()) {
        CHECK(m.residual == Rational(1) - m.q);
        CHECK((m.s == 0) == m.residual.is_zero());
        (m.s == 0 ? s_zero : m.s < 0 ? s_minus : s_plus) += 1;
        // Members are unit by construction.
        CHECK(span_inner_product(m, m, b) == Surd(Rational(1)));
    }
    CHECK(s_zero == 16);
    CHECK(s_minus == 31);
    CHECK(s_plus == 31);

    // Every in-span member reappears, in order, as the s == 0 stratum.
    std::vector<const SpanVector*> stratum;
    for (const auto& m : lifted.members())
        if (m.s == 0) stratum.push_back(&m);
    REQUIRE(stratum.size() == in_span.size());
    for (std::size_t i = 0; i < stratum.size(); ++i) {
        CHECK(stratum[i]->t == in_span[i].t);
        CHECK(in_span[i].q == Rational(1));
    }
}

TEST_CASE("span inner products match the materialized coordinates exactly") {
    const Basis b = lift_basis();
    const Cloud c = build_cloud_lifted(b, standard_angles());

    // 58 members land on an integer grid; the 20 members over q = 2/5
    // would need a lift scale of sqrt(6)/5 and stay symbolic.
    std::vector<std::size_t> explicit_ids;
    std::vector<ExplicitVector> coords;
    std::size_t symbolic = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto result = materialize(c[i], b);
        if (const auto* v = std::get_if<ExplicitVector>(&result)) {
            explicit_ids.push_back(i);
            coords.push_back(*v);
        } else {
            ++symbolic;
            CHECK(c[i].q == Rational(2, 5));
            CHECK_THROWS_AS(materialize_explicit(c[i], b), kiss::ConstructionMismatch);
        }
    }
    CHECK(explicit_ids.size() == 58);
    CHECK(symbolic == 20);

    for (std::size_t a = 0; a < explicit_ids.size(); ++a) {
        CHECK(coords[a].is_unit());
        for (std::size_t bb = a; bb < explicit_ids.size(); ++bb)
            CHECK(span_inner_product(c[explicit_ids[a]], c[explicit_ids[bb]], b) ==
                  inner_product(coords[a], coords[bb]));
    }
}

TEST_CASE("a known lifted member materializes to its integer form") {
    const Basis b = lift_basis();
    const Cloud c = build_cloud_lifted(b, standard_angles());
    const Rational mh(-1, 2);
    const SpanVector* down = nullptr;
    const SpanVector* up = nullptr;
    for (const auto& m : c.members()) {
        if (m.t == std::vector<Rational>{Rational(0), mh, mh, mh}) {
            (m.s < 0 ? down : up) = &m;
        }
    }
    REQUIRE(down != nullptr);
    REQUIRE(up != nullptr);
    CHECK(down->q == Rational(3, 5));
    CHECK(down->residual == Rational(2, 5));
    CHECK(span_inner_product(*down, *up, b) == Surd(Rational(1, 5)));

    const ExplicitVector v = materialize_explicit(*down, b);
    CHECK(v.z == std::vector<long>{-1, 1, -4, -4, -4});
    CHECK(v.norm_square == 50);
    // The upward lift lands back on the coarse grid: (-e1 + e2) / sqrt(2).
    const ExplicitVector w = materialize_explicit(*up, b);
    CHECK(w.z == std::vector<long>{-1, 1, 0, 0, 0});
    CHECK(w.norm_square == 2);
}

TEST_CASE("members that fit no single grid come back symbolic") {
    const Basis b = plane_basis(ExplicitVector{{0, 0, 1}, 1});
    const Cloud c = build_cloud_lifted(b, AngleSet({Rational(1, 3)}));
    REQUIRE(c.size() == 2); // t = (1/3, 1/3), q = 2/9, lifted both ways
    CHECK(c[0].q == Rational(2, 9));
    CHECK(c[0].residual == Rational(7, 9));

    const auto result = materialize(c[0], b);
    REQUIRE(std::holds_alternative<SymbolicVector>(result));
    const auto& sym = std::get<SymbolicVector>(result);
    REQUIRE(sym.dim() == 3);
    CHECK(sym.span[0] == Surd(Rational(1, 3)));
    CHECK(sym.span[1] == Surd(Rational(1, 3)));
    CHECK(sym.span[2] == Surd(Rational(0)));
    CHECK(sym.lift[0] == Surd(Rational(0)));
    CHECK(sym.lift[1] == Surd(Rational(0)));
    CHECK(sym.lift[2] == Surd(Rational(0), Rational(7, 9), -1));

    const auto up = materialize(c[1], b);
    REQUIRE(std::holds_alternative<SymbolicVector>(up));
    CHECK(std::get<SymbolicVector>(up).lift[2] == Surd(Rational(0), Rational(7, 9), +1));

    CHECK_THROWS_AS(materialize_explicit(c[0], b), kiss::ConstructionMismatch);
}

TEST_CASE("span inner product rejects tuples of the wrong length") {
    const Basis b = plane_basis();
    SpanVector good{{Rational(1), Rational(0)}, Rational(1), Rational(0), 0};
    SpanVector bad{{Rational(1)}, Rational(1), Rational(0), 0};
    CHECK_THROWS_AS(span_inner_product(good, bad, b), kiss::BasisMismatch);
    CHECK_THROWS_AS(span_inner_product(bad, good, b), kiss::BasisMismatch);
}

} // TEST_SUITE
