#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace kiss {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin wrapper over GMP's mpq_class so that no expression
/// templates leak into the rest of the code and so that parsing/printing
/// follow the "p/q" wire format.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long n, long d);
    Rational(const Int& n, const Int& d);
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    /// Parses "p" or "p/q" (base 10). Throws ParseError on malformed input
    /// or zero denominator.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    Int numerator() const { return Int(v_.get_num()); }
    Int denominator() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Non-authoritative decimal approximation (display only).
    double approx() const { return v_.get_d(); }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    void canonicalize() { v_.canonicalize(); }

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root of a rational, if it is a perfect square of a rational
/// (both numerator and denominator perfect squares). Returns the nonnegative
/// root.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Largest square divisor split: n = s * k^2 with s squarefree. Returns {s, k}.
/// Requires n > 0.
std::pair<Int, Int> squarefree_decompose(const Int& n);

} // namespace kiss
