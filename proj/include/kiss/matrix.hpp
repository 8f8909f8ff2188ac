#pragma once

#include <cstddef>
#include <vector>

#include "kiss/rational.hpp"

namespace kiss {

/// Dense matrix of exact rationals, row-major. Just enough linear algebra
/// for Gram matrices: multiply, transpose, exact inverse.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RationalMatrix transpose() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

/// Exact inverse via Gauss-Jordan elimination, pivoting on the first nonzero
/// entry of each column. Throws SingularMatrix on rank deficiency and
/// DimensionMismatch if m is not square. No tolerances anywhere.
RationalMatrix mat_inverse(const RationalMatrix& m);

/// Row-vector times matrix: (1 x n) * (n x c).
std::vector<Rational> row_times_matrix(const std::vector<Rational>& row, const RationalMatrix& m);

/// Quadratic-ish form t * M * u^T for row vectors t, u.
Rational bilinear_form(const std::vector<Rational>& t, const RationalMatrix& m,
                       const std::vector<Rational>& u);

} // namespace kiss
