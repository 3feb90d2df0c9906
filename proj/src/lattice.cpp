#include "latfix/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "latfix/linalg.hpp"
#include "latfix/random.hpp"
#include "latfix/simplex.hpp"

namespace latfix {

const char* to_string(LatticeVerdict v) {
  switch (v) {
    case LatticeVerdict::NotLatticeSubspace:
      return "NotLatticeSubspace";
    case LatticeVerdict::LatticeSubspaceOnly:
      return "LatticeSubspaceOnly";
    case LatticeVerdict::Sublattice:
      return "Sublattice";
  }
  return "?";
}

LatticeClassification classify_subspace(const Subspace& f) {
  LatticeClassification out;
  out.rays = positive_cone(f).rays;
  const std::size_t d = f.dim();
  const std::size_t r = out.rays.empty() ? 0 : rank(QMatrix(out.rays));
  out.cone_generating = r == d;
  out.cone_simplicial = out.rays.size() == d && r == d;
  out.rays_support_disjoint = true;
  for (std::size_t i = 0; i < out.rays.size(); ++i) {
    for (std::size_t j = i + 1; j < out.rays.size(); ++j) {
      for (std::size_t k = 0; k < f.ambient_dim(); ++k) {
        if (sgn(out.rays[i][k]) != 0 && sgn(out.rays[j][k]) != 0) out.rays_support_disjoint = false;
      }
    }
  }
  if (!out.cone_generating || !out.cone_simplicial) {
    out.verdict = LatticeVerdict::NotLatticeSubspace;
  } else if (out.rays_support_disjoint) {
    out.verdict = LatticeVerdict::Sublattice;
  } else {
    out.verdict = LatticeVerdict::LatticeSubspaceOnly;
  }
  return out;
}

std::optional<QVector> least_element_above(const Subspace& f, const QVector& lower) {
  const std::size_t n = f.ambient_dim();
  if (lower.size() != n) throw InvalidInput("least_element_above: dimension mismatch");
  // z = lower + s with s >= 0 and N z = 0 for the annihilator rows N.
  const auto& ann = f.annihilator();
  QMatrix a(ann.size(), n);
  QVector b(ann.size());
  for (std::size_t i = 0; i < ann.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = ann[i][j];
    b[i] = -dot(ann[i], lower);
  }
  const StandardFormLp lp(a, b);
  if (!lp.feasible()) return std::nullopt;
  QVector z = lower;
  for (std::size_t i = 0; i < n; ++i) {
    QVector c(n);
    c[i] = 1;
    const LpResult r = lp.minimize(c);
    if (r.status != LpStatus::Optimal) {
      // z_i >= lower_i on the feasible set, so the minimum always exists.
      throw std::logic_error("least_element_above: coordinate minimization not optimal");
    }
    z[i] += r.value;
  }
  if (!f.contains(z)) return std::nullopt;
  return z;
}

std::optional<QVector> least_upper_bound_in(const Subspace& f, const std::vector<QVector>& g) {
  if (g.empty()) throw DomainError("least_upper_bound_in: empty set");
  QVector ambient_sup = g.front();
  for (const auto& v : g) {
    if (!f.contains(v)) throw DomainError("least_upper_bound_in: vector outside the subspace");
    ambient_sup = componentwise_max(ambient_sup, v);
  }
  return least_element_above(f, ambient_sup);
}

std::optional<QVector> modulus_in(const Subspace& f, const QVector& x) {
  return least_upper_bound_in(f, {x, -x});
}

namespace {

// Is there v in F with s_i v_i >= 1 for every i in the support of F?
bool full_dimensional_cell(const Subspace& f, const std::vector<std::size_t>& support,
                           const std::vector<int>& signs) {
  // v_i = s_i (1 + t_i), t >= 0, on the support; v vanishes elsewhere.
  const auto& ann = f.annihilator();
  QMatrix a(ann.size(), support.size());
  QVector b(ann.size());
  for (std::size_t r = 0; r < ann.size(); ++r) {
    Rational rhs = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const Rational coeff = ann[r][support[k]] * signs[k];
      a(r, k) = coeff;
      rhs -= coeff;
    }
    b[r] = rhs;
  }
  return StandardFormLp(a, b).feasible();
}

}  // namespace

bool sign_pattern_sublattice_oracle(const Subspace& f) {
  const std::size_t n = f.ambient_dim();
  if (n > kSignPatternMaxDim) {
    throw DomainError("sign-pattern oracle supports ambient dimension <= 12");
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : f.basis()) {
      if (sgn(b[i]) != 0) {
        support.push_back(i);
        break;
      }
    }
  }
  if (support.empty()) return true;
  const std::size_t k = support.size();
  // s and -s give the same reflection test; fix the first sign.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    std::vector<int> signs(k, 1);
    for (std::size_t j = 1; j < k; ++j) {
      if (mask & (std::uint64_t{1} << (j - 1))) signs[j] = -1;
    }
    if (!full_dimensional_cell(f, support, signs)) continue;
    for (const auto& b : f.basis()) {
      QVector reflected = b;
      for (std::size_t j = 0; j < k; ++j) reflected[support[j]] *= signs[j];
      if (!f.contains(reflected)) return false;
    }
  }
  return true;
}

namespace {

QVector random_positive_element(Rng& rng, const std::vector<QVector>& rays, std::size_t n) {
  QVector x(n);
  for (const auto& r : rays) {
    const Rational c = random_rational(rng, 0, 9, 4);
    if (sgn(c) != 0) x = x + c * r;
  }
  return x;
}

}  // namespace

bool am_property_check(const Subspace& f, std::size_t trials, std::uint64_t seed) {
  const LatticeClassification cls = classify_subspace(f);
  if (cls.verdict == LatticeVerdict::NotLatticeSubspace) {
    throw DomainError("am_property_check needs a lattice subspace");
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const QVector x = random_positive_element(rng, cls.rays, f.ambient_dim());
    const QVector y = random_positive_element(rng, cls.rays, f.ambient_dim());
    const auto sup = least_upper_bound_in(f, {x, y});
    if (!sup) return false;
    if (sup_norm(*sup) != std::max(sup_norm(x), sup_norm(y))) return false;
  }
  return true;
}

std::optional<std::pair<QVector, QVector>> find_missing_supremum(const Subspace& f,
                                                                 std::size_t attempts,
                                                                 std::uint64_t seed) {
  for (const auto& b : f.basis()) {
    if (!modulus_in(f, b)) return std::make_pair(b, QVector(-b));
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    QVector cx(f.dim());
    QVector cy(f.dim());
    for (auto& c : cx) c = random_rational(rng, -5, 5, 3);
    for (auto& c : cy) c = random_rational(rng, -5, 5, 3);
    const QVector x = f.combine(cx);
    const QVector y = f.combine(cy);
    if (!least_upper_bound_in(f, {x, y})) return std::make_pair(x, y);
  }
  return std::nullopt;
}

}  // namespace latfix
