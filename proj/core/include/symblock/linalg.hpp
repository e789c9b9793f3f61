#pragma once

#include <cstddef>
#include <vector>

#include "symblock/matrix.hpp"

namespace symblock {

/// Orthogonal projection from character columns.
///
/// Requires X^t * conj(X) == diag(norms) exactly (checked; throws
/// OrthogonalityError otherwise) and returns conj(X) * diag(norms)^-1 * X^t
/// as an exact rational matrix. The result is checked to be symmetric,
/// idempotent and of rank equal to the column count before returning;
/// a failure is a ConsistencyError, not a test-time concern.
RationalMatrix gram_project(const CycloMatrix& x, const std::vector<Int>& norms,
                            int jobs = 1);

/// Exact characteristic polynomial det(tI - A) of an integer matrix
/// (Berkowitz, division free). Coefficients returned low degree first;
/// leading coefficient is 1.
std::vector<Int> char_poly(const IntMatrix& a);

struct IntegerRoots {
    Int scale;                       // the multiplier that was applied
    std::vector<Int> roots;          // with multiplicity, descending
    std::vector<Int> residual;       // non-linear leftover factor, low degree
                                     // first; empty when fully split
};

/// Integer eigenvalues of scale*A, where A is rational and scale*A must be
/// integral. Roots are found by divisor search on the constant coefficient
/// with exact deflation; whatever does not split over Z is reported as the
/// residual factor.
IntegerRoots char_poly_integer_roots(const RationalMatrix& a, const Int& scale);

/// Rank by fraction-free Gaussian elimination.
std::size_t rank(const RationalMatrix& a);

/// Exact inverse (Gauss-Jordan). Throws ShapeError if singular/non-square.
RationalMatrix inverse(const RationalMatrix& a);

RationalMatrix identity_matrix(std::size_t n);

}  // namespace symblock
