#pragma once

#include <optional>
#include <vector>

#include "latfix/matrix.hpp"

namespace latfix {

struct EchelonForm {
  QMatrix reduced;                   // reduced row echelon form, same shape as input
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row, increasing
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination with pivot columns chosen left to right.
EchelonForm rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Nonzero rows of the RREF of the given vectors: the canonical basis of their
/// span. All vectors must have length `dim`.
std::vector<QVector> canonical_span(const std::vector<QVector>& vectors, std::size_t dim);

/// Canonical basis of {v : m v = 0}: the null vectors read off the RREF (one per
/// free column) brought to reduced row echelon form themselves. Empty iff the
/// kernel is trivial.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Basis of {y : y^T m = 0}.
std::vector<QVector> left_kernel_basis(const QMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

/// Some solution x of m x = b, or nullopt when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

}  // namespace latfix
