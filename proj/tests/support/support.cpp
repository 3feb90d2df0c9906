#include "support.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

#include "latfix/cyclicity.hpp"
#include "latfix/linalg.hpp"

namespace latfix::testing {

std::size_t bareiss_rank(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Integer(m(i, j) * l);
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd e(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<long>(i), static_cast<long>(j)) = m(i, j).get_d();
  }
  return e;
}

}  // namespace

std::vector<std::complex<double>> float_roots(const QPolynomial& p) {
  const int d = p.degree();
  if (d < 1) return {};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  const double lead = p.leading().get_d();
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coefficient(static_cast<std::size_t>(i)).get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<std::complex<double>> out;
  for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

std::vector<std::complex<double>> float_eigenvalues(const QMatrix& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
  std::vector<std::complex<double>> out;
  for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

std::size_t float_nullity(const QMatrix& m, std::complex<double> lambda, double tol) {
  const long n = static_cast<long>(m.rows());
  Eigen::MatrixXcd a = to_eigen(m).cast<std::complex<double>>();
  a -= lambda * Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  std::size_t zero = 0;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) < tol) ++zero;
  }
  return zero;
}

double max_root_modulus(const QPolynomial& p) {
  double best = 0;
  for (const auto& r : float_roots(p)) best = std::max(best, std::abs(r));
  return best;
}

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, long max_den,
                      int zero_weight) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (uniform_int(rng, 0, zero_weight) == 0) continue;
      m(i, j) = random_rational(rng, lo, hi, max_den);
    }
  }
  return m;
}

QPolynomial random_polynomial(Rng& rng, int degree, long lo, long hi, long max_den) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = random_rational(rng, lo, hi, max_den);
  while (sgn(c.back()) == 0) c.back() = random_rational(rng, lo, hi, max_den);
  return QPolynomial(c);
}

QMatrix planted_cyclic_contraction(Rng& rng, std::size_t n, std::vector<std::size_t>* cycles) {
  QMatrix m(n, n);
  std::size_t pos = 0;
  std::vector<std::size_t> lens;
  // At least one cycle; leave room for a strict part now and then.
  while (pos < n) {
    const auto room = static_cast<long>(n - pos);
    const auto len = static_cast<std::size_t>(uniform_int(rng, 1, std::min<long>(room, 6)));
    if (!lens.empty() && uniform_int(rng, 0, 3) == 0) break;
    for (std::size_t i = 0; i < len; ++i) m(pos + i, pos + (i + 1) % len) = 1;
    lens.push_back(len);
    pos += len;
  }
  // Strict contraction on the rest: row sums at most 1/2, reading from anywhere.
  for (std::size_t i = pos; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (uniform_int(rng, 0, 2) == 0) m(i, j) = ratio(uniform_int(rng, 0, 2), 4 * static_cast<long>(n));
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  QMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(perm[i], perm[j]) = m(i, j);
  }
  if (cycles) *cycles = lens;
  return p;
}

std::vector<QMatrix> random_commuting_family(Rng& rng, std::size_t n) {
  if (uniform_int(rng, 0, 1) == 0) {
    const QMatrix t = random_positive_contraction(rng, n);
    return {t, t * t, t * t * t};
  }
  std::vector<QMatrix> blocks;
  std::size_t used = 0;
  while (used < n) {
    const auto size = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n - used)));
    blocks.push_back(random_positive_contraction(rng, size));
    used += size;
  }
  const auto members = static_cast<std::size_t>(uniform_int(rng, 2, 3));
  std::vector<QMatrix> family;
  for (std::size_t k = 0; k < members; ++k) {
    std::vector<QMatrix> parts;
    for (const auto& b : blocks) parts.push_back(b.power(static_cast<unsigned>(uniform_int(rng, 0, 2))));
    family.push_back(QMatrix::block_diagonal(parts));
  }
  return family;
}

QMatrix random_l1_contraction_with_fixed_space(Rng& rng, std::size_t n) {
  for (;;) {
    QMatrix t = random_positive_contraction(rng, n).transpose();
    if (!kernel_basis(QMatrix::identity(n) - t).empty()) return t;
  }
}

QMatrix random_sup_contraction_with_fixed_space(Rng& rng, std::size_t n) {
  return random_l1_contraction_with_fixed_space(rng, n).transpose();
}

Subspace random_subspace(Rng& rng, std::size_t n) {
  const auto d = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n)));
  std::vector<QVector> gens;
  const bool nonnegative = uniform_int(rng, 0, 1) == 0;
  for (std::size_t k = 0; k < d; ++k) {
    QVector v(n);
    for (auto& x : v) {
      if (uniform_int(rng, 0, 1) == 0) continue;
      x = nonnegative ? Rational(uniform_int(rng, 1, 3)) : Rational(uniform_int(rng, -3, 3));
    }
    gens.push_back(v);
  }
  Subspace f(n, gens);
  if (f.is_zero()) {
    QVector e(n);
    e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1))] = 1;
    return Subspace(n, {e});
  }
  return f;
}

QMatrix random_dissipative_metzler(Rng& rng, std::size_t n) {
  QMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational off = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || uniform_int(rng, 0, 1) == 0) continue;
      a(i, j) = random_rational(rng, 0, 5, 3);
      off += a(i, j);
    }
    const Rational slack = uniform_int(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 0, 3, 2);
    a(i, i) = -off - slack;
  }
  return a;
}

QVector random_super_fixed(Rng& rng, const QMatrix& t) {
  const std::size_t n = t.rows();
  const auto fixed = kernel_basis(QMatrix::identity(n) - t);
  const QVector ones(n, Rational(1));
  QVector g;
  const auto terms = uniform_int(rng, 1, 3);
  for (long k = 0; k < terms; ++k) {
    QVector f(n);
    for (const auto& b : fixed) f = f + random_rational(rng, -4, 4, 3) * b;
    const QVector term = f - random_rational(rng, 0, 3, 2) * ones;
    g = g.empty() ? term : componentwise_max(g, term);
  }
  if (uniform_int(rng, 0, 2) == 0) g = componentwise_max(g, QVector(n));
  return g;
}

QVector random_cone_point(Rng& rng, const std::vector<QVector>& rays, std::size_t n) {
  QVector x(n);
  for (const auto& r : rays) x = x + random_rational(rng, 0, 6, 3) * r;
  return x;
}

}  // namespace latfix::testing
