#include "kiss/cloud.hpp"

#include <string>

#include "kiss/errors.hpp"

namespace kiss {

Basis::Basis(std::vector<ExplicitVector> rows, std::optional<ExplicitVector> perp)
    : rows_(std::move(rows)), perp_(std::move(perp)) {
    if (rows_.empty()) throw BasisError("basis needs at least one row");
    const std::size_t k = rows_[0].dim();
    const std::size_t d = rows_.size();
    if (d > k) throw BasisError("more basis rows than coordinates");

    scales_.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto& row = rows_[i];
        if (row.dim() != k) throw BasisError("ragged basis row lengths");
        if (row.norm_square <= 0) throw BasisError("non-positive norm-square in basis");
        if (!row.is_unit())
            throw BasisError("basis row " + std::to_string(i) + " is not unit");
        auto [sf, scale] = squarefree_decompose(Int(row.norm_square));
        if (i == 0) sigma_ = sf;
        else if (sf != sigma_)
            throw BasisError("basis norm-square products are not perfect squares "
                             "(row " + std::to_string(i) + "); Gram matrix would be irrational");
        scales_.push_back(scale);
    }

    gram_ = RationalMatrix(d, d);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            // <B_i, B_j> = (z_i . z_j) / (k_i k_j sigma), rational by validation.
            const Rational g(integer_dot(rows_[i], rows_[j]),
                             scales_[i] * scales_[j] * sigma_);
            gram_(i, j) = g;
            gram_(j, i) = g;
            if (i != j) {
                if (g > half)
                    throw BasisError("basis rows " + std::to_string(i) + " and " +
                                     std::to_string(j) + " are not compatible");
                if (same_real_vector(rows_[i], rows_[j]))
                    throw BasisError("duplicate basis rows");
            }
        }
    try {
        gram_inverse_ = mat_inverse(gram_);
    } catch (const SingularMatrix&) {
        throw BasisError("basis rows are linearly dependent (singular Gram matrix)");
    }

    if (perp_) {
        if (perp_->dim() != k) throw BasisError("perpendicular row has wrong length");
        if (!perp_->is_unit()) throw BasisError("perpendicular row is not unit");
        for (std::size_t i = 0; i < d; ++i)
            if (integer_dot(*perp_, rows_[i]) != 0)
                throw BasisError("perpendicular row is not orthogonal to basis row " +
                                 std::to_string(i));
    }
}

AngleSet::AngleSet(std::vector<Rational> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) throw BasisError("empty angle set");
    const Rational half(1, 2);
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (angles_[i] > half) throw BasisError("angle " + angles_[i].str() + " exceeds 1/2");
        for (std::size_t j = i + 1; j < angles_.size(); ++j)
            if (angles_[i] == angles_[j])
                throw BasisError("repeated angle " + angles_[i].str());
    }
}

namespace {

// Visit all |A|^d index tuples in lexicographic order (first slot most
// significant), calling fn with the corresponding angle tuple.
template <typename Fn>
void for_each_tuple(const AngleSet& angles, std::size_t d, Fn&& fn) {
    std::vector<std::size_t> idx(d, 0);
    std::vector<Rational> t(d, angles[0]);
    for (;;) {
        fn(t);
        std::size_t slot = d;
        while (slot > 0) {
            --slot;
            if (++idx[slot] < angles.size()) {
                t[slot] = angles[idx[slot]];
                break;
            }
            idx[slot] = 0;
            t[slot] = angles[0];
            if (slot == 0) return;
        }
    }
}

} // namespace

Cloud build_cloud_in_span(const Basis& basis, const AngleSet& angles) {
    const Rational one(1);
    std::vector<SpanVector> members;
    for_each_tuple(angles, basis.span_dim(), [&](const std::vector<Rational>& t) {
        const Rational q = bilinear_form(t, basis.gram_inverse(), t);
        if (q == one) members.push_back({t, q, Rational(0), 0});
    });
    return Cloud(basis, std::move(members));
}

Cloud build_cloud_lifted(const Basis& basis, const AngleSet& angles) {
    if (!basis.has_perp())
        throw BasisError("lifted cloud needs a basis with a perpendicular row");
    const Rational one(1);
    std::vector<SpanVector> members;
    for_each_tuple(angles, basis.span_dim(), [&](const std::vector<Rational>& t) {
        const Rational q = bilinear_form(t, basis.gram_inverse(), t);
        if (q > one) return;
        const Rational r = one - q;
        if (r.is_zero()) {
            members.push_back({t, q, r, 0});
        } else {
            members.push_back({t, q, r, -1});
            members.push_back({t, q, r, +1});
        }
    });
    return Cloud(basis, std::move(members));
}

Surd span_inner_product(const SpanVector& u, const SpanVector& v, const Basis& basis) {
    if (u.t.size() != basis.span_dim() || v.t.size() != basis.span_dim())
        throw BasisMismatch("span vector tuple length does not match basis");
    const Rational rational_part = bilinear_form(u.t, basis.gram_inverse(), v.t);
    return Surd(rational_part, u.residual * v.residual, u.s * v.s);
}

namespace {

// Span-component coefficients: coordinate j of t*Ginv*B is rho_j / sqrt(sigma)
// with rho_j = sum_i c_i z_ij / k_i.
std::vector<Rational> span_coefficients(const SpanVector& u, const Basis& basis) {
    const std::vector<Rational> c = row_times_matrix(u.t, basis.gram_inverse());
    const std::size_t k = basis.coord_dim();
    std::vector<Rational> rho(k);
    for (std::size_t i = 0; i < basis.span_dim(); ++i) {
        if (c[i].is_zero()) continue;
        const Rational ci_over_ki = c[i] / Rational(basis.scale_factors()[i], Int(1));
        for (std::size_t j = 0; j < k; ++j) {
            const long zij = basis.rows()[i].z[j];
            if (zij != 0) rho[j] += ci_over_ki * Rational(Int(zij), Int(1));
        }
    }
    return rho;
}

// Build the minimal-N explicit vector denoting w / sqrt(m), w rational, m > 0.
ExplicitVector explicit_from_grid(const std::vector<Rational>& w, const Int& m) {
    Int lcm = 1;
    for (const auto& wj : w) {
        const Int den = wj.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    ExplicitVector out;
    out.z.reserve(w.size());
    for (const auto& wj : w) {
        const Int zi = Int(wj.numerator() * (lcm / wj.denominator()));
        if (!zi.fits_slong_p()) throw ParseError("materialized coordinate overflows");
        out.z.push_back(zi.get_si());
    }
    const Int n = lcm * lcm * m;
    if (!n.fits_slong_p()) throw ParseError("materialized norm-square overflows");
    out.norm_square = n.get_si();
    return out.canonical();
}

} // namespace

MaterializeResult materialize(const SpanVector& u, const Basis& basis) {
    const std::vector<Rational> rho = span_coefficients(u, basis);

    if (u.s == 0) return explicit_from_grid(rho, basis.sigma());

    // Lift radicand mu = r / N_perp; coordinate j gains s * zp_j * sqrt(mu).
    const ExplicitVector& zp = basis.perp();
    const Rational mu = u.residual / Rational(Int(zp.norm_square), Int(1));

    // Single grid 1/sqrt(sigma) if sqrt(mu) = lambda / sqrt(sigma) for a
    // rational lambda, i.e. mu*sigma is a perfect rational square.
    if (auto lambda = rational_sqrt(mu * Rational(basis.sigma(), Int(1)))) {
        std::vector<Rational> w = rho;
        const Rational coeff = (u.s > 0 ? *lambda : -*lambda);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (zp.z[j] != 0) w[j] += coeff * Rational(Int(zp.z[j]), Int(1));
        return explicit_from_grid(w, basis.sigma());
    }

    bool span_zero = true;
    for (const auto& r : rho)
        if (!r.is_zero()) { span_zero = false; break; }
    if (span_zero) {
        // Pure lift: s * zp_j * sqrt(p/q) = (s * p * zp_j) / sqrt(p*q).
        const Int p = mu.numerator();
        const Int q = mu.denominator();
        std::vector<Rational> w(zp.dim());
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = Rational(Int(u.s) * p * Int(zp.z[j]), Int(1));
        return explicit_from_grid(w, p * q);
    }

    // Mixed incommensurable radicals: exact symbolic fallback.
    SymbolicVector sym;
    const Rational sigma_rat(basis.sigma(), Int(1));
    sym.span.reserve(rho.size());
    sym.lift.reserve(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) {
        sym.span.push_back(Surd(Rational(0), rho[j] * rho[j] / sigma_rat, rho[j].sign()));
        const Rational zpj(Int(zp.z[j]), Int(1));
        sym.lift.push_back(Surd(Rational(0), zpj * zpj * mu, u.s * (zp.z[j] < 0 ? -1 : zp.z[j] > 0 ? 1 : 0)));
    }
    return sym;
}

ExplicitVector materialize_explicit(const SpanVector& u, const Basis& basis) {
    MaterializeResult res = materialize(u, basis);
    if (auto* ev = std::get_if<ExplicitVector>(&res)) return *ev;
    throw ConstructionMismatch("cloud member has no explicit integer-grid form");
}

} // namespace kiss
