#include "latfix/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace latfix {

void StandardFormLp::pivot(Tableau& t, std::size_t row, std::size_t col) {
  QVector& pr = t.rows[row];
  const Rational inv = 1 / pr[col];
  for (auto& v : pr) v *= inv;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i == row) continue;
    QVector& r = t.rows[i];
    if (sgn(r[col]) == 0) continue;
    const Rational f = r[col];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (sgn(pr[j]) != 0) r[j] -= f * pr[j];
    }
  }
  t.basis[row] = col;
}

StandardFormLp::RunResult StandardFormLp::run(Tableau& t, const QVector& cost,
                                              std::size_t columns) {
  const std::size_t m = t.rows.size();
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < columns && !entering; ++j) {
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t.rows[i][j]) != 0) reduced -= cost[t.basis[i]] * t.rows[i][j];
      }
      if (reduced < 0) entering = j;
    }
    if (!entering) return RunResult::Optimal;
    const std::size_t col = *entering;
    const std::size_t rhs = t.rows.empty() ? 0 : t.rows[0].size() - 1;
    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.rows[i][col] <= 0) continue;
      const Rational ratio = t.rows[i][rhs] / t.rows[i][col];
      if (!leaving || ratio < best || (ratio == best && t.basis[i] < t.basis[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (!leaving) return RunResult::Unbounded;
    pivot(t, *leaving, col);
  }
}

StandardFormLp::StandardFormLp(const QMatrix& a, const QVector& b) : n_(a.cols()) {
  const std::size_t m = a.rows();
  if (b.size() != m) throw InvalidInput("LP: right-hand side length mismatch");
  // Phase I: one artificial per row, rhs made nonnegative.
  Tableau t;
  for (std::size_t i = 0; i < m; ++i) {
    QVector row(n_ + m + 1);
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n_; ++j) row[j] = flip ? Rational(-a(i, j)) : a(i, j);
    row[n_ + i] = 1;
    row[n_ + m] = flip ? Rational(-b[i]) : b[i];
    t.rows.push_back(std::move(row));
    t.basis.push_back(n_ + i);
  }
  QVector cost(n_ + m);
  for (std::size_t i = 0; i < m; ++i) cost[n_ + i] = 1;
  run(t, cost, n_ + m);

  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n_) infeasibility += t.rows[i][n_ + m];
  }
  if (infeasibility != 0) return;
  feasible_ = true;

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n_) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n_ && !col; ++j) {
      if (sgn(t.rows[i][j]) != 0) col = j;
    }
    if (col) {
      pivot(t, i, *col);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  for (auto& row : t.rows) {
    Rational rhs = row[n_ + m];
    row.resize(n_ + 1);
    row[n_] = rhs;
  }
  tableau_ = std::move(t);
}

QVector StandardFormLp::basic_solution() const {
  QVector x(n_);
  for (std::size_t i = 0; i < tableau_.rows.size(); ++i) x[tableau_.basis[i]] = tableau_.rows[i][n_];
  return x;
}

LpResult StandardFormLp::minimize(const QVector& c) const {
  if (c.size() != n_) throw InvalidInput("LP: objective length mismatch");
  LpResult result;
  if (!feasible_) return result;
  Tableau t = tableau_;
  if (run(t, c, n_) == RunResult::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = QVector(n_);
  for (std::size_t i = 0; i < t.rows.size(); ++i) result.x[t.basis[i]] = t.rows[i][n_];
  result.value = dot(c, result.x);
  return result;
}

}  // namespace latfix
