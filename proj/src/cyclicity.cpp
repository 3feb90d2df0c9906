#include "latfix/cyclicity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "latfix/linalg.hpp"
#include "latfix/spectral.hpp"

namespace latfix {

unsigned RootOfUnitySpectrum::multiplicity_at(unsigned order) const {
  for (const auto& o : orders) {
    if (o.order == order) return o.multiplicity;
  }
  return 0;
}

RootOfUnitySpectrum root_of_unity_spectrum(const QMatrix& t) {
  if (!t.square()) throw InvalidInput("root_of_unity_spectrum needs a square matrix");
  const QPolynomial p = char_poly(t);
  const auto dim = static_cast<unsigned>(t.rows());
  RootOfUnitySpectrum out;
  unsigned cyclotomic_roots = 0;
  for (unsigned n = 1; n < cyclotomic_order_limit(dim); ++n) {
    const unsigned phi = euler_phi(n);
    if (phi > dim) continue;
    const QPolynomial& c = cyclotomic(n);
    const unsigned alg = multiplicity_of(c, p);
    if (alg == 0) continue;
    const std::size_t kernel = kernel_basis(c(t)).size();
    if (kernel % phi != 0) throw std::logic_error("cyclotomic kernel dimension not divisible by phi(n)");
    out.orders.push_back({n, static_cast<unsigned>(kernel / phi), alg});
    cyclotomic_roots += phi * alg;
  }
  out.count_on_circle = unit_circle_root_count(p).count_on_circle;
  out.non_cyclotomic_boundary = out.count_on_circle > cyclotomic_roots;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "Pass";
    case Verdict::Fail:
      return "Fail";
    case Verdict::Inapplicable:
      return "Inapplicable";
  }
  return "?";
}

CyclicityReport verify_dimension_cyclicity(const PositiveMatrixOperator& t) {
  CyclicityReport r;
  r.contractive = contraction_check(t);
  r.spectrum = root_of_unity_spectrum(t.matrix());
  if (!r.contractive) {
    r.verdict = Verdict::Inapplicable;
    return r;
  }
  bool all = true;
  for (const auto& o : r.spectrum.orders) {
    for (unsigned k = 0; k < o.order; ++k) {
      DimensionEstimate e;
      e.order = o.order;
      e.power = k;
      e.multiplicity = o.multiplicity;
      e.power_order = o.order / std::gcd(o.order, k);
      e.power_multiplicity = r.spectrum.multiplicity_at(e.power_order);
      e.holds = e.power_multiplicity >= e.multiplicity;
      all = all && e.holds;
      r.estimates.push_back(e);
    }
  }
  r.verdict = all ? Verdict::Pass : Verdict::Fail;
  return r;
}

std::string SemigroupReport::describe_imaginary() const {
  std::string s = imaginary_eigenvalues == 0
                      ? "no nonzero purely imaginary eigenvalues"
                      : std::to_string(imaginary_eigenvalues) + " nonzero purely imaginary eigenvalues";
  if (zero_eigenvalue) s += "; 0 is an eigenvalue";
  return s;
}

SemigroupReport semigroup_imaginary_check(const QMatrix& a) {
  if (a.rows() == 0 || !a.square()) throw InvalidInput("semigroup generator must be square and nonempty");
  SemigroupReport r;
  const std::size_t n = a.rows();
  r.metzler = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = a(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (sgn(a(i, j)) < 0) r.metzler = false;
      row += abs(a(i, j));
    }
    if (i == 0 || row > r.log_norm_sup) r.log_norm_sup = row;
  }
  r.characteristic = char_poly(a);
  r.zero_eigenvalue = sgn(r.characteristic.coefficient(0)) == 0;

  // Roots i*b (b real, nonzero) are shared by p(x) and p(-x) as conjugate pairs.
  QPolynomial h = gcd(r.characteristic, r.characteristic.reflect());
  const QPolynomial x = QPolynomial::monomial(1, 1);
  while (h.degree() >= 1 && sgn(h.coefficient(0)) == 0) h = h / x;
  // h(-x) = +-h(x) and h(0) != 0, so h is even: h(x) = q(x^2). With x^2 = -s,
  // imaginary roots correspond to positive roots s.
  std::vector<Rational> q;
  for (int k = 0; k <= h.degree(); k += 2) {
    const Rational c = h.coefficient(static_cast<std::size_t>(k));
    q.push_back((k / 2) % 2 == 0 ? c : Rational(-c));
  }
  const QPolynomial in_s(q);
  if (in_s.degree() >= 1) {
    r.imaginary_eigenvalues = 2 * sturm_count_above(squarefree_part(in_s), 0);
  }
  if (!r.metzler || r.log_norm_sup > 0) {
    r.verdict = Verdict::Inapplicable;
  } else {
    r.verdict = r.imaginary_eigenvalues == 0 ? Verdict::Pass : Verdict::Fail;
  }
  return r;
}

namespace {

// Row with support on a few random columns and row sum 1 or a random value in (0, 1].
void fill_row(Rng& rng, QMatrix& m, std::size_t row, const std::vector<std::size_t>& columns) {
  std::vector<std::size_t> cols = columns;
  std::shuffle(cols.begin(), cols.end(), rng);
  const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(std::min<std::size_t>(cols.size(), 3))));
  std::vector<Rational> w(k);
  Rational total = 0;
  for (auto& x : w) {
    x = ratio(uniform_int(rng, 1, 6), uniform_int(rng, 1, 4));
    x.canonicalize();
    total += x;
  }
  const Rational row_sum = uniform_int(rng, 0, 1) == 0 ? Rational(1) : ratio(uniform_int(rng, 1, 6), 6);
  for (std::size_t i = 0; i < k; ++i) m(row, cols[i]) = w[i] * row_sum / total;
}

}  // namespace

QMatrix random_positive_contraction(Rng& rng, std::size_t n) {
  QMatrix m(n, n);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (n >= 2 && uniform_int(rng, 0, 2) == 0) {
    // Cyclic permutation on the first b coordinates, the rest feeding from anywhere.
    const auto b = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(n)));
    for (std::size_t i = 0; i < b; ++i) m(i, (i + 1) % b) = 1;
    for (std::size_t i = b; i < n; ++i) fill_row(rng, m, i, all);
    std::vector<std::size_t> perm = all;
    std::shuffle(perm.begin(), perm.end(), rng);
    QMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p(perm[i], perm[j]) = m(i, j);
    }
    return p;
  }
  for (std::size_t i = 0; i < n; ++i) fill_row(rng, m, i, all);
  return m;
}

std::string probe_header() {
  return "A nonnegative matrix has a block-triangular Frobenius normal form with irreducible "
         "diagonal blocks, and the peripheral spectrum of each irreducible block is a full set of "
         "roots of unity; hence no matrix is a counterexample, and these records are consistency "
         "evidence for the implementation only.";
}

ProbeSummary probe_random_contractions(std::size_t trials, std::size_t dim_max, std::uint64_t seed,
                                       Execution execution) {
  if (trials == 0) throw InvalidInput("probe needs at least one trial");
  if (dim_max == 0) throw InvalidInput("probe needs dim_max >= 1");
  ProbeSummary out;
  out.records = run_trials<ProbeRecord>(
      trials,
      [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(dim_max)));
        const PositiveMatrixOperator t(random_positive_contraction(rng, n));
        const CyclicityReport report = verify_dimension_cyclicity(t);
        ProbeRecord rec;
        rec.trial = i;
        rec.dim = n;
        rec.orders = report.spectrum.orders;
        rec.non_cyclotomic = report.spectrum.non_cyclotomic_boundary;
        rec.verdict = report.verdict;
        rec.violation = rec.non_cyclotomic || rec.verdict != Verdict::Pass;
        return rec;
      },
      execution);
  for (const auto& r : out.records) out.violations += r.violation ? 1 : 0;
  return out;
}

}  // namespace latfix
