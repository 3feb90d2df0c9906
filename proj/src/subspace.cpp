#include "latfix/subspace.hpp"

#include "latfix/linalg.hpp"

namespace latfix {

Subspace::Subspace(std::size_t ambient_dim, const std::vector<QVector>& generators)
    : ambient_dim_(ambient_dim), basis_(canonical_span(generators, ambient_dim)) {
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (sgn(b[p]) == 0) ++p;
    pivots_.push_back(p);
  }
  if (basis_.empty()) {
    annihilator_ = canonical_span(QMatrix::identity(ambient_dim).row_list(), ambient_dim);
  } else {
    annihilator_ = kernel_basis(basis_matrix());
  }
}

Subspace Subspace::full(std::size_t n) { return Subspace(n, QMatrix::identity(n).row_list()); }

Subspace Subspace::zero(std::size_t n) { return Subspace(n, {}); }

QMatrix Subspace::basis_matrix() const {
  if (basis_.empty()) return QMatrix(0, ambient_dim_);
  return QMatrix(basis_);
}

bool Subspace::contains(const QVector& x) const {
  if (x.size() != ambient_dim_) throw InvalidInput("subspace membership: dimension mismatch");
  for (const auto& y : annihilator_) {
    if (sgn(dot(x, y)) != 0) return false;
  }
  return true;
}

QVector Subspace::coordinates(const QVector& x) const {
  if (!contains(x)) throw DomainError("vector does not lie in the subspace");
  QVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = x[pivots_[i]];
  return c;
}

QVector Subspace::combine(const QVector& coefficients) const {
  if (coefficients.size() != dim()) throw InvalidInput("coefficient count mismatch");
  QVector z(ambient_dim_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(coefficients[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) z[j] += coefficients[i] * basis_[i][j];
  }
  return z;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InvalidInput("intersect: dimension mismatch");
  std::vector<QVector> constraints = annihilator_;
  constraints.insert(constraints.end(), other.annihilator_.begin(), other.annihilator_.end());
  if (constraints.empty()) return full(ambient_dim_);
  return Subspace(ambient_dim_, kernel_basis(QMatrix(constraints)));
}

}  // namespace latfix
