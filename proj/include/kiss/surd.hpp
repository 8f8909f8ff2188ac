#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "kiss/rational.hpp"

namespace kiss {

/// Exact value of the form a + s*sqrt(b) with a, b rational, b >= 0 and
/// s in {-1, 0, +1}. Every inner product in the pipeline has this shape.
///
/// Canonical form returned by the constructors:
///   - s == 0  implies  b == 0 (and vice versa),
///   - b is never a perfect rational square (sqrt(4) folds into a).
/// Canonical forms denote their reals uniquely, so operator== is structural
/// and still agrees with real-number equality.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& rational) : a_(rational) {}          // NOLINT: implicit by design
    Surd(long n) : a_(Rational(n)) {}

    /// a + s*sqrt(b). Throws std::domain_error if b < 0 (general algebraic
    /// numbers are out of scope) or s is outside {-1, 0, +1}.
    Surd(const Rational& a, const Rational& b, int s);

    const Rational& rational_part() const { return a_; }
    const Rational& radicand() const { return b_; }
    int radical_sign() const { return s_; }

    bool is_rational() const { return s_ == 0; }

    /// Sign of the denoted real.
    int sign() const;

    Surd operator-() const;

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.s_ == y.s_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Real-number ordering, decided exactly by sign analysis and squaring.
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

    /// Ordering against a rational: one sign analysis plus one squaring step.
    friend std::strong_ordering compare(const Surd& x, const Rational& y);

    /// "a", "sqrt(b)", "a + sqrt(b)", "a - sqrt(b)".
    std::string str() const;

    /// Non-authoritative decimal approximation (display only).
    double approx() const;

private:
    Rational a_;
    Rational b_;
    int s_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

} // namespace kiss
