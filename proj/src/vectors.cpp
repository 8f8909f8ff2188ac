#include "kiss/vectors.hpp"

#include <ostream>
#include <sstream>
#include <tuple>

#include "kiss/errors.hpp"

namespace kiss {

Rational ExplicitVector::norm2() const {
    Int sum = 0;
    for (long c : z) sum += Int(c) * Int(c);
    return Rational(sum, Int(norm_square));
}

bool ExplicitVector::is_unit() const {
    Int sum = 0;
    for (long c : z) sum += Int(c) * Int(c);
    return sum == Int(norm_square);
}

ExplicitVector ExplicitVector::negated() const {
    ExplicitVector out = *this;
    for (auto& c : out.z) c = -c;
    return out;
}

ExplicitVector ExplicitVector::canonical() const {
    Int g = 0;
    for (long c : z) {
        Int a(c < 0 ? -c : c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g == 0) return ExplicitVector{std::vector<long>(z.size(), 0), 1};
    // Largest k with k | g and k^2 | N, i.e. k^2 | gcd(g^2, N).
    Int m;
    Int g2 = g * g;
    Int n(norm_square);
    mpz_gcd(m.get_mpz_t(), g2.get_mpz_t(), n.get_mpz_t());
    const Int k = squarefree_decompose(m).second;
    if (k == 1) return *this;
    ExplicitVector out;
    out.z.reserve(z.size());
    const long kk = static_cast<long>(k.get_si());
    for (long c : z) out.z.push_back(c / kk);
    out.norm_square = norm_square / (kk * kk);
    return out;
}

std::string ExplicitVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

Int integer_dot(const ExplicitVector& u, const ExplicitVector& v) {
    if (u.dim() != v.dim()) throw DimensionMismatch("dot product of different dimensions");
    Int sum = 0;
    for (std::size_t i = 0; i < u.z.size(); ++i) sum += Int(u.z[i]) * Int(v.z[i]);
    return sum;
}

Surd inner_product(const ExplicitVector& u, const ExplicitVector& v) {
    const Int dot = integer_dot(u, v);
    // (dot) / sqrt(Nu*Nv)  ==  sign(dot) * sqrt(dot^2 / (Nu*Nv))
    const Rational radicand(dot * dot, Int(u.norm_square) * Int(v.norm_square));
    return Surd(Rational(0), radicand, sgn(dot));
}

bool same_real_vector(const ExplicitVector& u, const ExplicitVector& v) {
    if (u.dim() != v.dim()) return false;
    // z_u / sqrt(N_u) == z_v / sqrt(N_v) iff componentwise signs match and
    // z_u[i]^2 * N_v == z_v[i]^2 * N_u.
    for (std::size_t i = 0; i < u.z.size(); ++i) {
        const long a = u.z[i], b = v.z[i];
        if ((a < 0) != (b < 0) || (a == 0) != (b == 0)) return false;
        if (Int(a) * Int(a) * Int(v.norm_square) != Int(b) * Int(b) * Int(u.norm_square))
            return false;
    }
    return true;
}

bool canonical_less(const ExplicitVector& u, const ExplicitVector& v) {
    const ExplicitVector cu = u.canonical();
    const ExplicitVector cv = v.canonical();
    return std::tie(cu.norm_square, cu.z) < std::tie(cv.norm_square, cv.z);
}

std::ostream& operator<<(std::ostream& os, const ExplicitVector& v) {
    os << "[";
    for (std::size_t i = 0; i < v.z.size(); ++i) {
        if (i) os << ",";
        os << v.z[i];
    }
    os << "]/sqrt(" << v.norm_square << ")";
    return os;
}

} // namespace kiss
