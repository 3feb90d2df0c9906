#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latfix/matrix.hpp"

namespace latfix {

/// Polynomial with rational coefficients in ascending degree order. The
/// coefficient list is always trimmed, so the zero polynomial is empty and
/// every other polynomial has a nonzero leading coefficient.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);
  QPolynomial(std::initializer_list<Rational> coefficients);

  static QPolynomial constant(const Rational& c);
  static QPolynomial monomial(const Rational& c, std::size_t degree);
  /// x - root
  static QPolynomial linear_root(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  QMatrix operator()(const QMatrix& m) const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator-() const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator*(const Rational& s) const;
  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  QPolynomial derivative() const;
  QPolynomial power(unsigned k) const;
  QPolynomial monic() const;
  /// Positive rational multiple with coprime integer coefficients and positive
  /// leading coefficient.
  QPolynomial primitive_part() const;
  /// x^deg p(1/x)
  QPolynomial reversal() const;
  /// p(-x)
  QPolynomial reflect() const;

  std::vector<std::string> coefficient_strings() const;
  /// Human-readable, highest degree first, e.g. "x^3 - 3*x^2 + 3*x - 1".
  std::string pretty(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  QPolynomial quotient;
  QPolynomial remainder;
};

DivMod divmod(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator/(const QPolynomial& a, const QPolynomial& b);
QPolynomial operator%(const QPolynomial& a, const QPolynomial& b);
bool divides(const QPolynomial& d, const QPolynomial& p);

/// Monic gcd (zero when both inputs are zero).
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// Yun's algorithm: p = lc(p) * prod s_k^k with s_k monic, squarefree and
/// pairwise coprime. Only factors of positive degree are returned.
std::vector<std::pair<QPolynomial, unsigned>> squarefree_decomposition(const QPolynomial& p);

/// Monic polynomial with the same roots as p, each simple.
QPolynomial squarefree_part(const QPolynomial& p);

/// How many times d divides p (d of positive degree, p nonzero).
unsigned multiplicity_of(const QPolynomial& d, QPolynomial p);

unsigned euler_phi(unsigned n);

/// n-th cyclotomic polynomial (n >= 1), integer coefficients.
const QPolynomial& cyclotomic(unsigned n);

/// Largest n with euler_phi(n) <= degree_bound is below this.
unsigned cyclotomic_order_limit(unsigned degree_bound);

/// Number of distinct real roots of p in the half-open interval (a, b]
/// via a Sturm chain. p must be nonzero.
unsigned sturm_count(const QPolynomial& p, const Rational& a, const Rational& b);

/// Number of distinct real roots of p in (a, +inf).
unsigned sturm_count_above(const QPolynomial& p, const Rational& a);

}  // namespace latfix
