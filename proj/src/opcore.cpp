#include "latfix/opcore.hpp"

#include <algorithm>

namespace latfix {

NormTag NormTag::weighted_one(QVector weights) {
  if (weights.empty()) throw InvalidInput("weighted norm needs weights");
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw InvalidInput("norm weights must be strictly positive");
  }
  return NormTag(NormKind::WeightedOne, std::move(weights));
}

Rational NormTag::vector_norm(const QVector& x) const {
  switch (kind_) {
    case NormKind::Sup:
      return sup_norm(x);
    case NormKind::One:
      return one_norm(x);
    case NormKind::WeightedOne: {
      if (x.size() != weights_.size()) throw InvalidInput("weight vector length mismatch");
      Rational s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += weights_[i] * abs(x[i]);
      return s;
    }
  }
  return 0;
}

Rational NormTag::operator_norm(const QMatrix& m) const {
  if (!m.square()) throw InvalidInput("operator norm of a non-square matrix");
  const std::size_t n = m.rows();
  Rational best = 0;
  switch (kind_) {
    case NormKind::Sup:
      for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += abs(m(i, j));
        best = std::max(best, s);
      }
      break;
    case NormKind::One:
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += abs(m(i, j));
        best = std::max(best, s);
      }
      break;
    case NormKind::WeightedOne:
      if (weights_.size() != n) throw InvalidInput("weight vector length mismatch");
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += weights_[i] * abs(m(i, j));
        best = std::max(best, Rational(s / weights_[j]));
      }
      break;
  }
  return best;
}

std::string NormTag::name() const {
  switch (kind_) {
    case NormKind::Sup:
      return "sup";
    case NormKind::One:
      return "one";
    case NormKind::WeightedOne:
      return "weighted_one";
  }
  return "?";
}

PositiveMatrixOperator::PositiveMatrixOperator(QMatrix matrix, NormTag norm)
    : matrix_(std::move(matrix)), norm_(std::move(norm)) {
  if (matrix_.rows() == 0 || !matrix_.square()) {
    throw InvalidInput("operator matrix must be square and nonempty");
  }
  if (!matrix_.is_nonnegative()) throw InvalidInput("operator matrix has a negative entry");
  if (norm_.kind() == NormKind::WeightedOne && norm_.weights().size() != matrix_.rows()) {
    throw InvalidInput("weight vector length does not match the operator");
  }
}

OperatorFamily::OperatorFamily(std::vector<PositiveMatrixOperator> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw InvalidInput("operator family is empty");
  for (const auto& t : members_) {
    if (t.dim() != members_.front().dim()) throw InvalidInput("family members differ in dimension");
    if (!(t.norm() == members_.front().norm())) throw InvalidInput("family members differ in norm");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      const QMatrix& a = members_[i].matrix();
      const QMatrix& b = members_[j].matrix();
      if (!(a * b == b * a)) {
        throw InvalidInput("family members " + std::to_string(i) + " and " + std::to_string(j) +
                           " do not commute");
      }
    }
  }
}

Rational operator_norm(const PositiveMatrixOperator& t) { return t.norm().operator_norm(t.matrix()); }

bool contraction_check(const PositiveMatrixOperator& t) { return operator_norm(t) <= 1; }

bool is_strictly_monotone(const NormTag& norm) { return norm.strictly_monotone(); }

const char* to_string(PowerBound v) {
  switch (v) {
    case PowerBound::Yes:
      return "Yes";
    case PowerBound::No:
      return "No";
    case PowerBound::Unknown:
      return "Unknown";
  }
  return "?";
}

PowerBoundReport power_bounded_verdict(const QMatrix& m) {
  PowerBoundReport out;
  out.characteristic = char_poly(m);
  out.disk = unit_disk_verdict(out.characteristic);
  if (out.disk == DiskVerdict::SomeOutside) {
    out.verdict = PowerBound::No;
    return out;
  }
  if (out.disk == DiskVerdict::AllStrictlyInside) {
    out.verdict = PowerBound::Yes;
    return out;
  }
  const UnitCircleRoots boundary = unit_circle_root_count(out.characteristic);
  out.verdict = PowerBound::Yes;
  for (const auto& [f, k] : boundary.factors) {
    // A fallback factor from an unfactorable block may still carry roots off
    // the circle; its semisimplicity then says nothing about the boundary.
    if (distinct_roots_on_circle(f) < static_cast<unsigned>(f.degree())) {
      out.verdict = PowerBound::Unknown;
      out.offending_factor = f;
      continue;
    }
    if (!semisimple_check(m, f)) {
      out.verdict = PowerBound::No;
      out.offending_factor = f;
      return out;
    }
  }
  return out;
}

PowerBoundReport power_bounded_verdict(const PositiveMatrixOperator& t) {
  return power_bounded_verdict(t.matrix());
}

bool super_fixed_check(const PositiveMatrixOperator& t, const QVector& g) {
  if (g.size() != t.dim()) throw InvalidInput("super_fixed_check: dimension mismatch");
  return leq(g, t.matrix() * g);
}

}  // namespace latfix
