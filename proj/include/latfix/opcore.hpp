#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latfix/matrix.hpp"
#include "latfix/polynomial.hpp"
#include "latfix/spectral.hpp"

namespace latfix {

enum class NormKind { Sup, One, WeightedOne };

/// Lattice norm on Q^n used to measure operators. Sup and (weighted) l1 are
/// the norms whose induced operator norms have exact closed forms.
class NormTag {
 public:
  static NormTag sup() { return NormTag(NormKind::Sup, {}); }
  static NormTag one() { return NormTag(NormKind::One, {}); }
  /// Weights must be strictly positive.
  static NormTag weighted_one(QVector weights);

  NormKind kind() const { return kind_; }
  const QVector& weights() const { return weights_; }
  /// l1-type norms are strictly monotone: 0 <= x <= y, x != y gives ||x|| < ||y||.
  bool strictly_monotone() const { return kind_ != NormKind::Sup; }

  Rational vector_norm(const QVector& x) const;
  /// Induced norm of the square matrix m.
  Rational operator_norm(const QMatrix& m) const;

  std::string name() const;
  bool operator==(const NormTag& o) const = default;

 private:
  NormTag(NormKind kind, QVector weights) : kind_(kind), weights_(std::move(weights)) {}
  NormKind kind_ = NormKind::Sup;
  QVector weights_;
};

/// Square matrix with nonnegative entries and the norm it acts under.
class PositiveMatrixOperator {
 public:
  /// Throws InvalidInput for non-square or non-positive matrices, or a weight
  /// vector of the wrong length.
  explicit PositiveMatrixOperator(QMatrix matrix, NormTag norm = NormTag::sup());

  const QMatrix& matrix() const { return matrix_; }
  const NormTag& norm() const { return norm_; }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  QMatrix matrix_;
  NormTag norm_;
};

/// Nonempty list of pairwise commuting positive operators sharing dimension and norm.
class OperatorFamily {
 public:
  /// Throws InvalidInput when the members are empty, mismatched or do not commute.
  explicit OperatorFamily(std::vector<PositiveMatrixOperator> members);

  const std::vector<PositiveMatrixOperator>& members() const { return members_; }
  std::size_t dim() const { return members_.front().dim(); }
  const NormTag& norm() const { return members_.front().norm(); }

 private:
  std::vector<PositiveMatrixOperator> members_;
};

Rational operator_norm(const PositiveMatrixOperator& t);
bool contraction_check(const PositiveMatrixOperator& t);
bool is_strictly_monotone(const NormTag& norm);

enum class PowerBound { Yes, No, Unknown };

const char* to_string(PowerBound v);

struct PowerBoundReport {
  PowerBound verdict = PowerBound::Unknown;
  DiskVerdict disk = DiskVerdict::SomeOutside;
  QPolynomial characteristic;
  // Boundary factor that is not semisimple (No) or could not be resolved (Unknown).
  std::optional<QPolynomial> offending_factor;
};

/// Power boundedness of a matrix: no eigenvalue outside the closed unit disk
/// and every eigenvalue on the circle semisimple.
PowerBoundReport power_bounded_verdict(const QMatrix& m);
PowerBoundReport power_bounded_verdict(const PositiveMatrixOperator& t);

/// T g >= g componentwise.
bool super_fixed_check(const PositiveMatrixOperator& t, const QVector& g);

}  // namespace latfix
