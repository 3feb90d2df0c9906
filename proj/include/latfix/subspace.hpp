#pragma once

#include <vector>

#include "latfix/matrix.hpp"

namespace latfix {

/// Linear subspace of Q^n held by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal iff
/// their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const std::vector<QVector>& generators);

  static Subspace full(std::size_t n);
  static Subspace zero(std::size_t n);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// d x n matrix with the basis vectors as rows.
  QMatrix basis_matrix() const;
  /// Rows spanning the orthogonal complement: x in F iff every row is orthogonal to x.
  const std::vector<QVector>& annihilator() const { return annihilator_; }

  bool contains(const QVector& x) const;
  /// Coordinates of x in the canonical basis; x must lie in the subspace.
  QVector coordinates(const QVector& x) const;
  QVector combine(const QVector& coefficients) const;

  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<QVector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<QVector> annihilator_;
};

}  // namespace latfix
