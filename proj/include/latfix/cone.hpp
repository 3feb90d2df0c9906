#pragma once

#include <vector>

#include "latfix/subspace.hpp"

namespace latfix {

/// Extreme rays of the pointed cone {c : A c >= 0} by the double description
/// method. A must have full column rank. The initial simplicial cone uses the
/// first linearly independent rows; the remaining rows are inserted in index
/// order, and two rays are combined only when they are adjacent, i.e. the
/// processed constraints active on both have rank d - 2. Rays are returned as
/// primitive integer vectors in lexicographic order.
std::vector<QVector> extreme_rays(const QMatrix& constraints);

/// F intersected with the nonnegative orthant, by its extreme rays.
struct PolyhedralCone {
  Subspace ambient;
  std::vector<QVector> rays;  // primitive, nonnegative, lexicographically sorted
};

/// Extreme rays of F ∩ Q^n_+, from the coefficient cone {c : B^T c >= 0}
/// (B the basis matrix) mapped back into F. F must be nonzero.
PolyhedralCone positive_cone(const Subspace& f);

bool lex_less(const QVector& a, const QVector& b);

}  // namespace latfix
