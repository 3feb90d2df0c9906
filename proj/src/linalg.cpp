#include "latfix/linalg.hpp"

#include <utility>

namespace latfix {

EchelonForm rref(const QMatrix& m) {
  EchelonForm out{m, {}};
  QMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVector> canonical_span(const std::vector<QVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  for (const auto& v : vectors) {
    if (v.size() != dim) throw InvalidInput("span: vector length mismatch");
  }
  const EchelonForm e = rref(QMatrix(vectors));
  std::vector<QVector> basis;
  basis.reserve(e.rank());
  for (std::size_t i = 0; i < e.rank(); ++i) basis.push_back(e.reduced.row(i));
  return basis;
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  const std::size_t n = m.cols();
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> raw;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  return canonical_span(raw, n);
}

std::vector<QVector> left_kernel_basis(const QMatrix& m) { return kernel_basis(m.transpose()); }

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (!m.square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw InvalidInput("solve: shape mismatch");
  const std::size_t n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const EchelonForm e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  QVector x(n);
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return x;
}

}  // namespace latfix
