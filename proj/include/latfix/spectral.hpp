#pragma once

#include <map>
#include <utility>
#include <vector>

#include "latfix/matrix.hpp"
#include "latfix/polynomial.hpp"

namespace latfix {

/// det(xI - M) by Faddeev-LeVerrier over the rationals.
QPolynomial char_poly(const QMatrix& m);

struct FactoredPolynomial {
  Rational unit;
  // Irreducible primitive integer factors (positive leading coefficient),
  // sorted by degree, then coefficients.
  std::vector<std::pair<QPolynomial, unsigned>> factors;
  // factor index -> n, when the factor is the n-th cyclotomic polynomial
  std::map<std::size_t, unsigned> cyclotomic_orders;

  QPolynomial expand() const;
};

inline constexpr int kMaxFactorDegree = 16;

/// Complete factorization over the rationals for degree <= 16: squarefree
/// decomposition, cyclotomic and monomial extraction, then Kronecker's
/// bounded integer factor search. Throws Unsupported above the degree bound
/// or when the search exceeds its work budget.
FactoredPolynomial factor_over_rationals(const QPolynomial& p);

/// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<QPolynomial> factor_squarefree(const QPolynomial& p);

/// n when p is a rational multiple of the n-th cyclotomic polynomial, else 0.
unsigned cyclotomic_order(const QPolynomial& p);

enum class DiskVerdict { AllStrictlyInside, InsideWithBoundary, SomeOutside };

const char* to_string(DiskVerdict v);

/// Schur-Cohn: true iff every root of p lies in the open unit disk.
bool all_roots_strictly_inside(const QPolynomial& p);

/// Location of the roots of p relative to the unit circle, exactly.
DiskVerdict unit_disk_verdict(const QPolynomial& p);

struct UnitCircleRoots {
  unsigned count_on_circle = 0;            // with algebraic multiplicity
  QPolynomial boundary_factor;             // product of the factors below
  std::vector<std::pair<QPolynomial, unsigned>> factors;  // monic, with multiplicity
  bool non_cyclotomic = false;             // some factor is not cyclotomic
};

/// Roots of p on the unit circle: reciprocal gcd, substitution t = x + 1/x
/// and a Sturm count on [-2, 2].
UnitCircleRoots unit_circle_root_count(const QPolynomial& p);

/// Number of distinct roots on the unit circle of a squarefree polynomial.
unsigned distinct_roots_on_circle(const QPolynomial& squarefree);

/// dim ker q(M) == dim ker q(M)^2. Throws DomainError when q does not divide
/// the characteristic polynomial of M.
bool semisimple_check(const QMatrix& m, const QPolynomial& q);

/// Thrown by fix_projection when the eigenvalue 1 has a nontrivial Jordan block.
class DefectiveFixedSpace : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Projection onto ker(I - M) along range(I - M).
QMatrix fix_projection(const QMatrix& m);

}  // namespace latfix
