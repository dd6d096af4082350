#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace greenseq {

using Int = std::int64_t;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer determinant (fraction-free Bareiss elimination).
Int exact_determinant(const IntMatrix& a);

/// Adjugate matrix: a * adjugate(a) = exact_determinant(a) * I.
IntMatrix adjugate(const IntMatrix& a);

/// Inverse of an integer matrix with determinant +-1.
/// Throws InternalInconsistencyError if the matrix is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// det(a[0..k][0..k]) for k = 1..n, in order.
std::vector<Int> leading_principal_minors(const IntMatrix& a);

/// Determinant of the principal submatrix with the given 0-based row/column set.
Int principal_minor(const IntMatrix& a, const std::vector<int>& rows);

bool lex_less(const IntVector& a, const IntVector& b);
bool is_strictly_positive(const IntVector& v);
bool is_nonnegative(const IntVector& v);

/// v divided by the gcd of its entries, sign-normalized so the first
/// nonzero entry is positive. Throws on the zero vector.
IntVector primitive_vector(IntVector v);

} // namespace greenseq
