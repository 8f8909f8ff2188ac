#include "kiss/surd.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kiss {

namespace {

// Sign of c + s*sqrt(b) for b >= 0. Works for any rational radicand, not
// just canonical ones; this is the single squaring step everything else
// reduces to.
int radical_sum_sign(const Rational& c, const Rational& b, int s) {
    if (s == 0 || b.is_zero()) return c.sign();
    if (s > 0) {
        if (c.sign() >= 0) return +1;
        const auto cmp = b <=> c * c;
        return cmp == std::strong_ordering::less ? -1 : cmp == std::strong_ordering::greater ? +1 : 0;
    }
    if (c.sign() <= 0) return -1;
    const auto cmp = (c * c) <=> b;
    return cmp == std::strong_ordering::less ? -1 : cmp == std::strong_ordering::greater ? +1 : 0;
}

// Sign of c + sqrt(b1) - sqrt(b2), both radicands > 0.
int plus_minus_sign(const Rational& c, const Rational& b1, const Rational& b2) {
    const int left = radical_sum_sign(c, b1, +1); // sign of c + sqrt(b1)
    if (left <= 0) return -1;                     // minus a strictly positive sqrt(b2)
    // Both sides positive: square (c + sqrt(b1))^2 = c^2 + b1 + 2c*sqrt(b1) vs b2.
    return radical_sum_sign(c * c + b1 - b2, Rational(4) * c * c * b1, c.sign());
}

std::strong_ordering to_ordering(int sign) {
    return sign < 0 ? std::strong_ordering::less
         : sign > 0 ? std::strong_ordering::greater
                    : std::strong_ordering::equal;
}

} // namespace

Surd::Surd(const Rational& a, const Rational& b, int s) : a_(a), b_(b), s_(s) {
    if (s_ < -1 || s_ > 1) throw std::domain_error("surd sign must be -1, 0 or +1");
    if (b_.sign() < 0) throw std::domain_error("negative radicand");
    if (s_ == 0 || b_.is_zero()) {
        b_ = Rational(0);
        s_ = 0;
        return;
    }
    if (auto root = rational_sqrt(b_)) {
        a_ += (s_ > 0 ? *root : -*root);
        b_ = Rational(0);
        s_ = 0;
    }
}

int Surd::sign() const {
    return radical_sum_sign(a_, b_, s_);
}

Surd Surd::operator-() const {
    Surd out;
    out.a_ = -a_;
    out.b_ = b_;
    out.s_ = -s_;
    return out;
}

std::strong_ordering compare(const Surd& x, const Rational& y) {
    return to_ordering(radical_sum_sign(x.a_ - y, x.b_, x.s_));
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const Rational c = x.a_ - y.a_;
    if (y.s_ == 0) return to_ordering(radical_sum_sign(c, x.b_, x.s_));
    if (x.s_ == 0) return to_ordering(-radical_sum_sign(-c, y.b_, y.s_));
    if (x.s_ > 0 && y.s_ < 0) {
        // c + sqrt(b1) + sqrt(b2)
        if (c.sign() >= 0) return std::strong_ordering::greater;
        return to_ordering(radical_sum_sign(x.b_ + y.b_ - c * c, Rational(4) * x.b_ * y.b_, +1));
    }
    if (x.s_ < 0 && y.s_ > 0) {
        // c - sqrt(b1) - sqrt(b2) = -((-c) + sqrt(b1) + sqrt(b2))
        if (c.sign() <= 0) return std::strong_ordering::less;
        return to_ordering(-radical_sum_sign(x.b_ + y.b_ - c * c, Rational(4) * x.b_ * y.b_, +1));
    }
    if (x.s_ > 0) return to_ordering(plus_minus_sign(c, x.b_, y.b_));
    // both negative: c - sqrt(b1) + sqrt(b2) = -((-c) + sqrt(b1) - sqrt(b2))
    return to_ordering(-plus_minus_sign(-c, x.b_, y.b_));
}

std::string Surd::str() const {
    if (s_ == 0) return a_.str();
    const std::string radical = "sqrt(" + b_.str() + ")";
    if (a_.is_zero()) return (s_ < 0 ? "-" : "") + radical;
    return a_.str() + (s_ < 0 ? " - " : " + ") + radical;
}

double Surd::approx() const {
    return a_.approx() + s_ * std::sqrt(b_.approx());
}

std::ostream& operator<<(std::ostream& os, const Surd& s) {
    return os << s.str();
}

} // namespace kiss
