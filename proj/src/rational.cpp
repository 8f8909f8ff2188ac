#include "kiss/rational.hpp"

#include <ostream>

#include "kiss/errors.hpp"

namespace kiss {

Rational::Rational(long n, long d) {
    if (d == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(n, d);
    canonicalize();
}

Rational::Rational(const Int& n, const Int& d) {
    if (sgn(d) == 0) throw ParseError("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal: " + s);
    if (sgn(mpz_class(q.get_den())) == 0) throw ParseError("zero denominator in: " + s);
    q.canonicalize();
    return Rational(std::move(q), already_canonical{});
}

Rational Rational::inverse() const {
    if (is_zero()) throw ParseError("inverse of zero");
    return Rational(mpq_class(1 / v_), already_canonical{});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ParseError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_), Rational::already_canonical{});
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    const Int num = x.numerator();
    const Int den = x.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (sgn(n) <= 0) throw ParseError("squarefree_decompose needs a positive integer");
    Int rem = n, k = 1;
    // Trial division is enough; norm-squares in this pipeline are small.
    for (Int f = 2; f * f <= rem; ++f) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
            k *= r;
            rem = 1;
            break;
        }
        const Int f2 = f * f;
        while (mpz_divisible_p(rem.get_mpz_t(), f2.get_mpz_t())) {
            rem /= f2;
            k *= f;
        }
    }
    return {rem, k};
}

} // namespace kiss
