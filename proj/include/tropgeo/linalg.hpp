#pragma once

// Exact rational linear algebra and integer lattice utilities. Everything is
// dense and desk-scale; no floating point anywhere.

#include <optional>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

Rational dot(const QVec& a, const QVec& b);

// Reduced row echelon form; returns the pivot column per row.
QMat rref(QMat a, std::vector<int>* pivot_cols = nullptr);

int rank(const QMat& a);

// Basis rows of {x in Q^n : a x = 0}, canonical against the rref pivots.
QMat nullspace(const QMat& a, int ncols);

// One solution of sum_j x_j a_j = b over the rows of a, if any.
std::optional<QVec> solve_row_combination(const QMat& a, const QVec& b);

// Scale a nonzero rational vector to the primitive integer vector with the
// same direction.
IVec primitive(const QVec& v);

// Same, allowing sign normalization (first nonzero entry positive).
IVec primitive_sign_normalized(const QVec& v);

QVec to_rational(const IVec& v);

// Determinant of a square matrix by exact Gaussian elimination.
Rational determinant(QMat a);

// Diagonalization D = U A V over Z with unimodular U, V; diag holds the
// nonnegative diagonal entries (rank many nonzero, divisibility chain not
// enforced), right_cols the matrix V by columns.
struct Diagonalization {
  std::vector<Integer> diag;
  IMat right;  // n x n, right[i][j] = V entry (row i, col j)
};
Diagonalization integer_diagonalize(IMat a, int ncols);

// Saturated basis of {x in Z^n : a x = 0} (rows).
IMat integer_kernel(const IMat& a, int ncols);

// Saturated lattice basis of (row space of a) ∩ Z^n.
IMat saturation(const IMat& rows, int ncols);

// [Z^n : Z-span of rows]; throws PreconditionError unless rows span Q^n.
Integer lattice_index(const IMat& rows, int ncols);

}  // namespace tropgeo
