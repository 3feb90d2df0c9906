#include "latfix/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace latfix {

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial::QPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::linear_root(const Rational& root) { return QPolynomial({-root, 1}); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational QPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational QPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational QPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QMatrix QPolynomial::operator()(const QMatrix& m) const {
  if (!m.square()) throw InvalidInput("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coefficient(i) + o.coefficient(i);
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coefficient(i) - o.coefficient(i);
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-() const { return *this * Rational(-1); }

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator*(const Rational& s) const {
  std::vector<Rational> r(coeffs_);
  for (auto& c : r) c *= s;
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::power(unsigned k) const {
  QPolynomial r = constant(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

QPolynomial QPolynomial::primitive_part() const {
  if (is_zero()) return {};
  QVector scaled = primitive(coeffs_);
  QPolynomial p(std::move(scaled));
  if (p.leading() < 0) p = -p;
  return p;
}

QPolynomial QPolynomial::reversal() const {
  return QPolynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

QPolynomial QPolynomial::reflect() const {
  std::vector<Rational> r(coeffs_);
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return QPolynomial(std::move(r));
}

std::vector<std::string> QPolynomial::coefficient_strings() const { return to_strings(coeffs_); }

std::string QPolynomial::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = a == 1;
    if (k == 0 || !unit) os << to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

DivMod divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {QPolynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial operator/(const QPolynomial& a, const QPolynomial& b) { return divmod(a, b).quotient; }
QPolynomial operator%(const QPolynomial& a, const QPolynomial& b) { return divmod(a, b).remainder; }

bool divides(const QPolynomial& d, const QPolynomial& p) { return (p % d).is_zero(); }

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = (a % b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<QPolynomial, unsigned>> squarefree_decomposition(const QPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<QPolynomial, unsigned>> out;
  if (p.degree() == 0) return out;
  const QPolynomial f = p.monic();
  const QPolynomial fp = f.derivative();
  QPolynomial a = gcd(f, fp);
  QPolynomial b = f / a;
  QPolynomial c = fp / a;
  QPolynomial d = c - b.derivative();
  unsigned k = 1;
  while (b.degree() > 0) {
    QPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

QPolynomial squarefree_part(const QPolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

unsigned multiplicity_of(const QPolynomial& d, QPolynomial p) {
  if (d.degree() <= 0) throw DomainError("multiplicity of a constant");
  unsigned m = 0;
  for (;;) {
    DivMod qr = divmod(p, d);
    if (!qr.remainder.is_zero() || p.is_zero()) break;
    p = std::move(qr.quotient);
    ++m;
  }
  return m;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

int moebius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

QPolynomial compute_cyclotomic(unsigned n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
  QPolynomial num = QPolynomial::constant(1);
  QPolynomial den = QPolynomial::constant(1);
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 0) continue;
    QPolynomial term = QPolynomial::monomial(1, d) - QPolynomial::constant(1);
    if (mu > 0) {
      num = num * term;
    } else {
      den = den * term;
    }
  }
  return num / den;
}

}  // namespace

const QPolynomial& cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<QPolynomial>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QPolynomial>(compute_cyclotomic(n));
  return *slot;
}

unsigned cyclotomic_order_limit(unsigned degree_bound) {
  // phi(n) >= sqrt(n / 2) for all n
  return 2 * degree_bound * degree_bound + 3;
}

namespace {

std::vector<QPolynomial> sturm_chain(const QPolynomial& p) {
  std::vector<QPolynomial> chain{p.primitive_part(), p.derivative().primitive_part()};
  while (!chain.back().is_zero()) {
    const QPolynomial r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern of -r.
    chain.push_back((-r).monic() * Rational(sgn(-r.leading())));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

unsigned sign_changes(const std::vector<int>& signs) {
  unsigned changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

unsigned changes_at(const std::vector<QPolynomial>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(sgn(q(x)));
  return sign_changes(s);
}

unsigned changes_at_plus_infinity(const std::vector<QPolynomial>& chain) {
  std::vector<int> s;
  for (const auto& q : chain) s.push_back(sgn(q.leading()));
  return sign_changes(s);
}

}  // namespace

unsigned sturm_count(const QPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (p.degree() == 0 || !(a < b)) return 0;
  const auto chain = sturm_chain(p);
  const unsigned va = changes_at(chain, a);
  const unsigned vb = changes_at(chain, b);
  return va - vb;
}

unsigned sturm_count_above(const QPolynomial& p, const Rational& a) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  const unsigned va = changes_at(chain, a);
  const unsigned vinf = changes_at_plus_infinity(chain);
  // A root exactly at a is not counted: the chain is evaluated at a itself,
  // where a zero of p is skipped as a sign.
  return va - vinf;
}

}  // namespace latfix
