#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "kiss/rational.hpp"
#include "kiss/surd.hpp"

namespace kiss {

/// Integer coordinate tuple z with positive norm-square N, denoting the real
/// vector z / sqrt(N). Unit iff sum(z_i^2) == N; that is checked at
/// validation time, not at construction, so non-unit data can still be
/// loaded and reported on.
struct ExplicitVector {
    std::vector<long> z;
    long norm_square = 1;

    std::size_t dim() const { return z.size(); }

    /// sum(z_i^2) / N as an exact rational (1 for unit vectors).
    Rational norm2() const;
    bool is_unit() const;

    ExplicitVector negated() const;

    /// Minimal-N representative of the denoted real vector: divides out the
    /// largest k with k | z and k^2 | N. (z, N) and (k*z, k^2*N) denote the
    /// same vector, so this is the canonical form.
    ExplicitVector canonical() const;

    std::string str() const;
};

/// Exact dot product of the integer parts, computed in arbitrary precision.
Int integer_dot(const ExplicitVector& u, const ExplicitVector& v);

/// Exact inner product of the denoted reals: (z_u . z_v) / sqrt(N_u N_v),
/// canonicalized (rational whenever the radical resolves).
/// Throws DimensionMismatch.
Surd inner_product(const ExplicitVector& u, const ExplicitVector& v);

/// Equality of the denoted real vectors (scale-blind).
bool same_real_vector(const ExplicitVector& u, const ExplicitVector& v);

/// Lexicographic order on canonical forms; any total order consistent with
/// same_real_vector, used for set comparisons.
bool canonical_less(const ExplicitVector& u, const ExplicitVector& v);

std::ostream& operator<<(std::ostream& os, const ExplicitVector& v);

} // namespace kiss
