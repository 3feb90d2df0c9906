#pragma once

#include <vector>

#include "latfix/matrix.hpp"

namespace latfix {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVector x;
  Rational value;
};

/// Exact two-phase simplex for  min c.x  subject to  A x = b, x >= 0.
///
/// Construction runs phase I once; minimize() then starts phase II from the
/// feasible basis for every objective, so several objectives over the same
/// polyhedron share the phase I work. Pivoting follows Bland's rule (lowest
/// eligible index enters, lowest basic index leaves among ratio ties), which
/// rules out cycling.
class StandardFormLp {
 public:
  StandardFormLp(const QMatrix& a, const QVector& b);

  bool feasible() const { return feasible_; }
  std::size_t variables() const { return n_; }
  LpResult minimize(const QVector& c) const;
  /// Some vertex of the feasible set (valid only when feasible()).
  QVector basic_solution() const;

 private:
  struct Tableau {
    std::vector<QVector> rows;       // each row: n columns + rhs
    std::vector<std::size_t> basis;  // basic variable per row
  };
  enum class RunResult { Optimal, Unbounded };
  static void pivot(Tableau& t, std::size_t row, std::size_t col);
  static RunResult run(Tableau& t, const QVector& cost, std::size_t columns);

  std::size_t n_ = 0;
  bool feasible_ = false;
  Tableau tableau_;
};

}  // namespace latfix
