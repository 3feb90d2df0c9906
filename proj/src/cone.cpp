#include "latfix/cone.hpp"

#include <algorithm>

#include "latfix/linalg.hpp"

namespace latfix {

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool adjacent(const QMatrix& a, const std::vector<std::size_t>& processed, const QVector& p,
              const QVector& q, std::size_t d) {
  std::vector<QVector> active;
  for (auto i : processed) {
    const QVector row = a.row(i);
    if (sgn(dot(row, p)) == 0 && sgn(dot(row, q)) == 0) active.push_back(row);
  }
  if (active.size() + 2 < d) return false;
  const std::size_t r = active.empty() ? 0 : rank(QMatrix(active));
  return r + 2 == d;
}

}  // namespace

std::vector<QVector> extreme_rays(const QMatrix& a) {
  const std::size_t d = a.cols();
  const std::size_t m = a.rows();
  if (d == 0) return {};

  // Initial simplicial cone from the first independent rows.
  std::vector<std::size_t> initial;
  std::vector<QVector> chosen;
  for (std::size_t i = 0; i < m && initial.size() < d; ++i) {
    std::vector<QVector> trial = chosen;
    trial.push_back(a.row(i));
    if (rank(QMatrix(trial)) == trial.size()) {
      chosen = std::move(trial);
      initial.push_back(i);
    }
  }
  if (initial.size() < d) throw DomainError("extreme_rays: constraint matrix is rank deficient");
  const auto inv = inverse(QMatrix(chosen));
  std::vector<QVector> rays;
  for (std::size_t j = 0; j < d; ++j) rays.push_back(primitive(inv->column(j)));

  std::vector<std::size_t> processed = initial;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::find(initial.begin(), initial.end(), i) != initial.end()) continue;
    const QVector row = a.row(i);
    std::vector<QVector> plus, zero, minus;
    std::vector<Rational> plus_val, minus_val;
    for (const auto& r : rays) {
      const Rational v = dot(row, r);
      if (v > 0) {
        plus.push_back(r);
        plus_val.push_back(v);
      } else if (v < 0) {
        minus.push_back(r);
        minus_val.push_back(v);
      } else {
        zero.push_back(r);
      }
    }
    if (minus.empty()) {
      processed.push_back(i);
      continue;
    }
    std::vector<QVector> next = plus;
    next.insert(next.end(), zero.begin(), zero.end());
    if (d >= 2) {
      for (std::size_t p = 0; p < plus.size(); ++p) {
        for (std::size_t q = 0; q < minus.size(); ++q) {
          if (!adjacent(a, processed, plus[p], minus[q], d)) continue;
          next.push_back(primitive(plus_val[p] * minus[q] - minus_val[q] * plus[p]));
        }
      }
    }
    rays = std::move(next);
    processed.push_back(i);
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

PolyhedralCone positive_cone(const Subspace& f) {
  if (f.is_zero()) throw DomainError("positive_cone of the zero subspace");
  // Coefficient c gives z = B^T c; the constraint z_i >= 0 is row i of B^T.
  const QMatrix constraints = f.basis_matrix().transpose();
  PolyhedralCone cone{f, {}};
  for (const auto& c : extreme_rays(constraints)) cone.rays.push_back(primitive(f.combine(c)));
  std::sort(cone.rays.begin(), cone.rays.end(), lex_less);
  return cone;
}

}  // namespace latfix
