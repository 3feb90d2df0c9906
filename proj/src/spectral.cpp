#include "latfix/spectral.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "latfix/linalg.hpp"

namespace latfix {

QPolynomial char_poly(const QMatrix& a) {
  if (!a.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  const QMatrix id = QMatrix::identity(n);
  QMatrix m = id;  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    const QMatrix am = a * m;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
    if (k < n) m = am + id * c[n - k];
  }
  return QPolynomial(std::move(c));
}

QPolynomial FactoredPolynomial::expand() const {
  QPolynomial p = QPolynomial::constant(unit);
  for (const auto& [f, k] : factors) p = p * f.power(k);
  return p;
}

unsigned cyclotomic_order(const QPolynomial& p) {
  if (p.degree() < 1) return 0;
  const QPolynomial m = p.monic();
  const auto deg = static_cast<unsigned>(p.degree());
  const unsigned limit = cyclotomic_order_limit(deg);
  for (unsigned n = 1; n < limit; ++n) {
    if (euler_phi(n) != deg) continue;
    if (cyclotomic(n) == m) return n;
  }
  return 0;
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 200000;
constexpr double kKroneckerBudget = 3.0e6;

// Prime factorization of |v| (v != 0) by trial division, or nullopt when a
// composite cofactor survives the trial bound.
std::optional<std::vector<std::pair<Integer, unsigned>>> factor_integer(Integer v) {
  v = abs(v);
  std::vector<std::pair<Integer, unsigned>> out;
  for (unsigned long p = 2; p <= kTrialDivisionLimit; ++p) {
    if (v == 1) break;
    const Integer pp(p);
    if (pp * pp > v) break;
    if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(pp, e);
  }
  if (v > 1) {
    const Integer lim(kTrialDivisionLimit);
    if (v < lim * lim || mpz_probab_prime_p(v.get_mpz_t(), 30) > 0) {
      out.emplace_back(v, 1);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::vector<Integer> positive_divisors(const std::vector<std::pair<Integer, unsigned>>& fac) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Integer integer_value(const QPolynomial& f, long x) {
  Rational v = f(Rational(x));
  return v.get_num();
}

bool has_integer_coefficients(const QPolynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

struct EvalPoint {
  long x;
  Integer value;
  std::vector<Integer> divisors;
};

// Searches for an integer factor of degree exactly d of the primitive integer
// polynomial f. Returns its primitive part (positive leading coefficient).
std::optional<QPolynomial> kronecker_factor(const QPolynomial& f, int d) {
  std::vector<EvalPoint> points;
  std::vector<long> abscissae{0};
  for (long r = 1; r <= 40; ++r) {
    abscissae.push_back(r);
    abscissae.push_back(-r);
  }
  for (long x : abscissae) {
    const Integer v = integer_value(f, x);
    if (v == 0) continue;
    auto fac = factor_integer(v);
    if (!fac) continue;
    points.push_back({x, v, positive_divisors(*fac)});
  }
  if (points.size() < static_cast<std::size_t>(d + 1)) {
    throw Unsupported("factor search: not enough usable evaluation points");
  }
  std::stable_sort(points.begin(), points.end(), [](const EvalPoint& a, const EvalPoint& b) {
    return a.divisors.size() < b.divisors.size();
  });
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  double work = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    work *= static_cast<double>(points[i].divisors.size()) * (i == 0 ? 1.0 : 2.0);
  }
  if (work > kKroneckerBudget) {
    throw Unsupported("factor search exceeds its work budget (degree " + std::to_string(d) +
                      " candidates)");
  }

  // Lagrange basis through the chosen abscissae.
  std::vector<QPolynomial> basis;
  for (std::size_t i = 0; i < k; ++i) {
    QPolynomial li = QPolynomial::constant(1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      li = li * QPolynomial::linear_root(Rational(points[j].x)) *
           (Rational(1) / Rational(points[i].x - points[j].x));
    }
    basis.push_back(std::move(li));
  }

  const Integer lead_f = f.leading().get_num();
  const Integer const_f = f.coefficient(0).get_num();
  std::vector<std::size_t> idx(k, 0);
  std::vector<int> sgns(k, 1);
  for (;;) {
    std::vector<Rational> coeffs(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Rational v(points[i].divisors[idx[i]] * sgns[i]);
      for (std::size_t c = 0; c < basis[i].coefficients().size(); ++c) {
        coeffs[c] += v * basis[i].coefficients()[c];
      }
    }
    QPolynomial g(std::move(coeffs));
    if (g.degree() == d && has_integer_coefficients(g)) {
      const Integer lg = g.leading().get_num();
      const Integer cg = g.coefficient(0).get_num();
      bool plausible = mpz_divisible_p(lead_f.get_mpz_t(), lg.get_mpz_t()) != 0;
      if (plausible && const_f != 0) {
        plausible = cg != 0 && mpz_divisible_p(const_f.get_mpz_t(), cg.get_mpz_t()) != 0;
      }
      for (std::size_t e = k; plausible && e < points.size() && e < k + 6; ++e) {
        const Integer gv = integer_value(g, points[e].x);
        plausible = gv != 0 && mpz_divisible_p(points[e].value.get_mpz_t(), gv.get_mpz_t()) != 0;
      }
      if (plausible && divides(g, f)) return g.primitive_part();
    }
    // odometer: divisor index, then sign (first point keeps a positive value)
    std::size_t pos = 0;
    for (; pos < k; ++pos) {
      if (++idx[pos] < points[pos].divisors.size()) break;
      idx[pos] = 0;
      if (pos > 0 && sgns[pos] == 1) {
        sgns[pos] = -1;
        break;
      }
      sgns[pos] = 1;
    }
    if (pos == k) break;
  }
  return std::nullopt;
}

bool factor_less(const QPolynomial& a, const QPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

}  // namespace

std::vector<QPolynomial> factor_squarefree(const QPolynomial& input) {
  std::vector<QPolynomial> out;
  QPolynomial f = input.primitive_part();
  if (f.degree() < 1) return out;
  const QPolynomial x = QPolynomial::monomial(1, 1);
  if (sgn(f.coefficient(0)) == 0) {
    out.push_back(x);
    f = (f / x).primitive_part();
  }
  const unsigned limit = cyclotomic_order_limit(static_cast<unsigned>(std::max(f.degree(), 1)));
  for (unsigned n = 1; n < limit && f.degree() >= 1; ++n) {
    if (euler_phi(n) > static_cast<unsigned>(f.degree())) continue;
    const QPolynomial& phi = cyclotomic(n);
    if (divides(phi, f)) {
      out.push_back(phi);
      f = (f / phi).primitive_part();
    }
  }
  for (int d = 1; 2 * d <= f.degree();) {
    auto g = kronecker_factor(f, d);
    if (!g) {
      ++d;
      continue;
    }
    out.push_back(*g);
    f = (f / *g).primitive_part();
  }
  if (f.degree() >= 1) out.push_back(f);
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

FactoredPolynomial factor_over_rationals(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree) {
    throw Unsupported("unsupported degree " + std::to_string(p.degree()) +
                      " for factorization (bound " + std::to_string(kMaxFactorDegree) + ")");
  }
  FactoredPolynomial out;
  for (const auto& [s, k] : squarefree_decomposition(p)) {
    for (auto& f : factor_squarefree(s)) out.factors.emplace_back(std::move(f), k);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  Rational lead_product = 1;
  for (const auto& [f, k] : out.factors) {
    for (unsigned i = 0; i < k; ++i) lead_product *= f.leading();
  }
  out.unit = p.leading() / lead_product;
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (const unsigned n = cyclotomic_order(out.factors[i].first); n != 0) {
      out.cyclotomic_orders[i] = n;
    }
  }
  return out;
}

const char* to_string(DiskVerdict v) {
  switch (v) {
    case DiskVerdict::AllStrictlyInside:
      return "AllStrictlyInside";
    case DiskVerdict::InsideWithBoundary:
      return "InsideWithBoundary";
    case DiskVerdict::SomeOutside:
      return "SomeOutside";
  }
  return "?";
}

bool all_roots_strictly_inside(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("root location of the zero polynomial");
  QPolynomial q = p.primitive_part();
  while (q.degree() >= 1) {
    const Rational a0 = q.coefficient(0);
    const Rational an = q.leading();
    if (abs(a0) >= abs(an)) return false;
    // Schur transform: (a_n q - a_0 q*) / x has degree n - 1.
    const QPolynomial t = q * an - q.reversal() * a0;
    std::vector<Rational> shifted(t.coefficients().begin() + 1, t.coefficients().end());
    q = QPolynomial(std::move(shifted)).primitive_part();
  }
  return true;
}

namespace {

// D_j(t) with x^j + x^-j = D_j(x + 1/x).
QPolynomial dickson(unsigned j) {
  QPolynomial prev = QPolynomial::constant(2);
  QPolynomial cur = QPolynomial::monomial(1, 1);
  if (j == 0) return prev;
  const QPolynomial t = QPolynomial::monomial(1, 1);
  for (unsigned k = 1; k < j; ++k) {
    QPolynomial next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

unsigned distinct_roots_on_circle(const QPolynomial& squarefree) {
  if (squarefree.is_zero()) throw DomainError("roots of the zero polynomial");
  QPolynomial s = squarefree.monic();
  unsigned count = 0;
  for (const Rational& r : {Rational(1), Rational(-1)}) {
    if (s.degree() >= 1 && sgn(s(r)) == 0) {
      ++count;
      s = s / QPolynomial::linear_root(r);
    }
  }
  if (s.degree() < 2) return count;
  // Roots on the circle come with their inverses (= conjugates).
  const QPolynomial g = gcd(s, s.reversal());
  if (g.degree() < 2) return count;
  if (g.degree() % 2 != 0 || !(g.reversal() == g)) {
    throw std::logic_error("reciprocal part is not palindromic: " + g.pretty());
  }
  const auto m = static_cast<unsigned>(g.degree() / 2);
  QPolynomial h = QPolynomial::constant(g.coefficient(m));
  for (unsigned j = 1; j <= m; ++j) h = h + dickson(j) * g.coefficient(m + j);
  // g(+-1) != 0, so h(+-2) != 0 and the half-open Sturm interval is open.
  count += 2 * sturm_count(squarefree_part(h), Rational(-2), Rational(2));
  return count;
}

UnitCircleRoots unit_circle_root_count(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  UnitCircleRoots out;
  out.boundary_factor = QPolynomial::constant(1);
  for (const auto& [sq, k] : squarefree_decomposition(p)) {
    QPolynomial s = sq;
    std::vector<std::pair<QPolynomial, unsigned>> on_circle;  // factor, distinct roots on circle
    const unsigned limit = cyclotomic_order_limit(static_cast<unsigned>(s.degree()));
    for (unsigned n = 1; n < limit && s.degree() >= 1; ++n) {
      const unsigned phi = euler_phi(n);
      if (phi > static_cast<unsigned>(s.degree())) continue;
      const QPolynomial& c = cyclotomic(n);
      if (divides(c, s)) {
        on_circle.emplace_back(c, phi);
        s = s / c;
      }
    }
    if (s.degree() >= 1 && distinct_roots_on_circle(s) > 0) {
      out.non_cyclotomic = true;
      try {
        for (const auto& f : factor_squarefree(s)) {
          const unsigned c = distinct_roots_on_circle(f);
          if (c > 0) on_circle.emplace_back(f.monic(), c);
        }
      } catch (const Unsupported&) {
        const QPolynomial g = gcd(s, s.reversal());
        on_circle.emplace_back(g, distinct_roots_on_circle(g));
      }
    }
    for (const auto& [f, c] : on_circle) {
      out.count_on_circle += c * k;
      out.boundary_factor = out.boundary_factor * f.power(k);
      out.factors.emplace_back(f, k);
    }
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
  return out;
}

DiskVerdict unit_disk_verdict(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("root location of the zero polynomial");
  if (all_roots_strictly_inside(p)) return DiskVerdict::AllStrictlyInside;
  const QPolynomial s = squarefree_part(p);
  const QPolynomial g = gcd(s, s.reversal());
  if (g.degree() < 1) return DiskVerdict::SomeOutside;
  // Off-circle roots of g come in pairs (l, 1/l); one of them is outside.
  if (distinct_roots_on_circle(g) < static_cast<unsigned>(g.degree())) {
    return DiskVerdict::SomeOutside;
  }
  QPolynomial q = p;
  for (QPolynomial c = gcd(q, g); c.degree() >= 1; c = gcd(q, g)) q = q / c;
  return all_roots_strictly_inside(q) ? DiskVerdict::InsideWithBoundary
                                      : DiskVerdict::SomeOutside;
}

bool semisimple_check(const QMatrix& m, const QPolynomial& q) {
  if (!m.square()) throw DomainError("semisimple_check needs a square matrix");
  if (q.is_zero() || !divides(q, char_poly(m))) {
    throw DomainError("q = " + q.pretty() + " does not divide the characteristic polynomial");
  }
  const QMatrix qm = q(m);
  return rank(qm) == rank(qm * qm);
}

QMatrix fix_projection(const QMatrix& m) {
  if (!m.square()) throw DomainError("fix_projection needs a square matrix");
  const std::size_t n = m.rows();
  const QMatrix a = QMatrix::identity(n) - m;
  const auto kernel = kernel_basis(a);
  if (kernel.empty()) return QMatrix(n, n);
  if (rank(a) != rank(a * a)) {
    throw DefectiveFixedSpace("eigenvalue 1 is not semisimple; the fixed space is defective");
  }
  const QMatrix k = QMatrix::from_columns(kernel);
  const QMatrix l(left_kernel_basis(a));
  const auto inner = inverse(l * k);
  if (!inner) throw std::logic_error("fix_projection: singular pairing of kernels");
  return k * (*inner) * l;
}

}  // namespace latfix
