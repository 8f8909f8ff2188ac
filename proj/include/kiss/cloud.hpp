#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "kiss/matrix.hpp"
#include "kiss/rational.hpp"
#include "kiss/surd.hpp"
#include "kiss/vectors.hpp"

namespace kiss {

/// A d-row basis of pairwise compatible unit vectors in k coordinates
/// (k == d for in-span clouds, k == d+1 with a perpendicular row for lifted
/// clouds), with its Gram matrix and inverse cached.
///
/// Construction validates: rows unit, pairwise compatible, pairwise
/// norm-square products perfect squares (so the Gram matrix is rational),
/// Gram nonsingular, and - when present - the perpendicular row unit and
/// exactly orthogonal to every basis row. Throws BasisError.
class Basis {
public:
    Basis(std::vector<ExplicitVector> rows, std::optional<ExplicitVector> perp);

    std::size_t span_dim() const { return rows_.size(); }       // d
    std::size_t coord_dim() const { return rows_[0].dim(); }    // k
    bool has_perp() const { return perp_.has_value(); }

    const std::vector<ExplicitVector>& rows() const { return rows_; }
    const ExplicitVector& perp() const { return *perp_; }
    const RationalMatrix& gram() const { return gram_; }
    const RationalMatrix& gram_inverse() const { return gram_inverse_; }

    /// Shared squarefree part sigma of the row norm-squares (N_i = sigma * k_i^2).
    const Int& sigma() const { return sigma_; }
    /// k_i = sqrt(N_i / sigma) per row.
    const std::vector<Int>& scale_factors() const { return scales_; }

private:
    std::vector<ExplicitVector> rows_;
    std::optional<ExplicitVector> perp_;
    RationalMatrix gram_;
    RationalMatrix gram_inverse_;
    Int sigma_;
    std::vector<Int> scales_;
};

/// Finite list of admissible inner products, each <= 1/2, all distinct.
/// Enumeration order follows the supplied order. Throws BasisError on
/// violations.
class AngleSet {
public:
    explicit AngleSet(std::vector<Rational> angles);

    std::size_t size() const { return angles_.size(); }
    const std::vector<Rational>& values() const { return angles_; }
    const Rational& operator[](std::size_t i) const { return angles_[i]; }

private:
    std::vector<Rational> angles_;
};

/// Symbolic cloud member relative to a Basis: denotes
///     t * Ginv * B + s * sqrt(r) * B_perp
/// with q = t Ginv t^T cached and r = 1 - q, so the vector is unit by
/// construction. r == 0 forces s == 0.
struct SpanVector {
    std::vector<Rational> t;
    Rational q;
    Rational residual;   // r = 1 - q
    int s = 0;
};

class Cloud {
public:
    Cloud(Basis basis, std::vector<SpanVector> members)
        : basis_(std::move(basis)), members_(std::move(members)) {}

    const Basis& basis() const { return basis_; }
    const std::vector<SpanVector>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const SpanVector& operator[](std::size_t i) const { return members_[i]; }

private:
    Basis basis_;
    std::vector<SpanVector> members_;
};

/// In-span cloud: all |A|^d tuples t with t Ginv t^T == 1 exactly, s == 0.
/// Tuples are enumerated lexicographically over the supplied angle order.
Cloud build_cloud_in_span(const Basis& basis, const AngleSet& angles);

/// Lifted cloud: tuples with q < 1 contribute two members (s = -1 then +1),
/// q == 1 contributes one (s = 0), q > 1 is discarded. Requires the basis
/// to carry a perpendicular row; throws BasisError otherwise.
Cloud build_cloud_lifted(const Basis& basis, const AngleSet& angles);

/// Exact inner product of two members of the same basis context:
/// t_u Ginv t_v^T + s_u s_v sqrt(r_u r_v). Throws BasisMismatch if tuple
/// lengths disagree with the basis.
Surd span_inner_product(const SpanVector& u, const SpanVector& v, const Basis& basis);

/// Exact surd coordinates of a member that admits no single-radical integer
/// form: entry j denotes span[j] + lift[j], each a quadratic surd.
struct SymbolicVector {
    std::vector<Surd> span;
    std::vector<Surd> lift;
    std::size_t dim() const { return span.size(); }
    double approx(std::size_t j) const { return span[j].approx() + lift[j].approx(); }
};

using MaterializeResult = std::variant<ExplicitVector, SymbolicVector>;

/// Real coordinates of a member. Returns an ExplicitVector (z, N) with the
/// smallest admissible N whenever every coordinate lies on a common
/// (1/sqrt(N)) * Z grid; otherwise the exact symbolic fallback.
MaterializeResult materialize(const SpanVector& u, const Basis& basis);

/// Convenience: materialize and require the explicit form.
/// Throws ConstructionMismatch if the member is symbolic-only.
ExplicitVector materialize_explicit(const SpanVector& u, const Basis& basis);

} // namespace kiss
