#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latfix/opcore.hpp"
#include "latfix/parallel.hpp"
#include "latfix/random.hpp"

namespace latfix {

struct RootOfUnityOrder {
  unsigned order = 1;
  unsigned multiplicity = 0;            // geometric, per primitive root
  unsigned algebraic_multiplicity = 0;  // multiplicity of the cyclotomic factor
};

struct RootOfUnitySpectrum {
  std::vector<RootOfUnityOrder> orders;  // increasing order, multiplicity > 0
  unsigned count_on_circle = 0;          // all unimodular eigenvalues, algebraic
  bool non_cyclotomic_boundary = false;  // some unimodular eigenvalue is not a root of unity

  unsigned multiplicity_at(unsigned order) const;
};

/// Geometric multiplicity of the primitive n-th roots of unity as
/// dim ker Phi_n(T) / phi(n), for every n with phi(n) <= dim.
RootOfUnitySpectrum root_of_unity_spectrum(const QMatrix& t);

enum class Verdict { Pass, Fail, Inapplicable };

const char* to_string(Verdict v);

struct DimensionEstimate {
  unsigned order = 1;
  unsigned power = 0;
  unsigned multiplicity = 0;
  unsigned power_order = 1;  // order / gcd(order, power)
  unsigned power_multiplicity = 0;
  bool holds = false;  // power_multiplicity >= multiplicity
};

struct CyclicityReport {
  bool contractive = false;
  RootOfUnitySpectrum spectrum;
  std::vector<DimensionEstimate> estimates;
  Verdict verdict = Verdict::Inapplicable;
};

/// For a positive contraction, the eigenvalue lambda^k has at least the
/// multiplicity of lambda for every root of unity lambda. Checked for every
/// reported order n and k = 0..n-1; Inapplicable for non-contractions.
CyclicityReport verify_dimension_cyclicity(const PositiveMatrixOperator& t);

struct SemigroupReport {
  bool metzler = false;
  Rational log_norm_sup;
  QPolynomial characteristic;
  bool zero_eigenvalue = false;
  unsigned imaginary_eigenvalues = 0;  // distinct, nonzero, purely imaginary
  Verdict verdict = Verdict::Inapplicable;

  std::string describe_imaginary() const;
};

/// Generator check: a Metzler matrix with nonpositive sup-norm logarithmic
/// norm generates a positive contractive semigroup, which then has no nonzero
/// purely imaginary eigenvalue. Imaginary roots are counted exactly from
/// gcd(p(x), p(-x)) with x^2 = -s and a Sturm count on s > 0.
SemigroupReport semigroup_imaginary_check(const QMatrix& a);

/// Random positive matrix with row sums <= 1: sparse substochastic rows,
/// sometimes with a planted cyclic permutation block.
QMatrix random_positive_contraction(Rng& rng, std::size_t n);

struct ProbeRecord {
  std::size_t trial = 0;
  std::size_t dim = 0;
  std::vector<RootOfUnityOrder> orders;
  bool non_cyclotomic = false;
  Verdict verdict = Verdict::Inapplicable;
  bool violation = false;
};

struct ProbeSummary {
  std::vector<ProbeRecord> records;  // ordered by trial
  std::size_t violations = 0;
};

/// Why a matrix probe cannot decide the open question it is aimed at.
std::string probe_header();

/// Trial i draws a matrix of size 1..dim_max from trial_seed(seed, i) and
/// checks that its unimodular eigenvalues are roots of unity and that the
/// dimension estimate holds.
ProbeSummary probe_random_contractions(std::size_t trials, std::size_t dim_max, std::uint64_t seed,
                                       Execution execution = Execution::Parallel);

}  // namespace latfix
