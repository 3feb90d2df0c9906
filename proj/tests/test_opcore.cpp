#include <gtest/gtest.h>

#include <algorithm>

#include "latfix/cyclicity.hpp"
#include "latfix/errors.hpp"
#include "latfix/linalg.hpp"
#include "latfix/opcore.hpp"
#include "support.hpp"

using namespace latfix;
using namespace latfix::testing;

namespace {

// Induced norms from their closed forms, written independently of the library.
Rational max_row_sum(const QMatrix& m) {
  Rational best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

Rational weighted_column_norm(const QMatrix& m, const QVector& w) {
  Rational best = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += w[i] * abs(m(i, j));
    best = std::max(best, Rational(s / w[j]));
  }
  return best;
}

QMatrix scaled_contraction(Rng& rng, std::size_t n) {
  static const Rational scales[] = {Rational(1, 2), Rational(1), Rational(3, 2)};
  return random_positive_contraction(rng, n) * scales[uniform_int(rng, 0, 2)];
}

}  // namespace

TEST(NormTag, VectorNorms) {
  const QVector x{1, -3, Rational(1, 2)};
  EXPECT_EQ(NormTag::sup().vector_norm(x), Rational(3));
  EXPECT_EQ(NormTag::one().vector_norm(x), Rational(9, 2));
  EXPECT_EQ(NormTag::weighted_one({2, 1, 4}).vector_norm(x), Rational(7));
  EXPECT_FALSE(NormTag::sup().strictly_monotone());
  EXPECT_TRUE(is_strictly_monotone(NormTag::one()));
  EXPECT_TRUE(is_strictly_monotone(NormTag::weighted_one({1, 2})));
  EXPECT_THROW(NormTag::weighted_one({1, 0}), InvalidInput);
}

TEST(OperatorNorm, MatchesClosedFormsAndBoundsVectors) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const QMatrix m = random_matrix(rng, n, n, 0, 4, 3, 1);
    QVector w(n);
    for (auto& x : w) x = random_rational(rng, 1, 5, 3);
    const NormTag tags[] = {NormTag::sup(), NormTag::one(), NormTag::weighted_one(w)};
    EXPECT_EQ(NormTag::sup().operator_norm(m), max_row_sum(m));
    EXPECT_EQ(NormTag::one().operator_norm(m), max_row_sum(m.transpose()));
    EXPECT_EQ(NormTag::weighted_one(w).operator_norm(m), weighted_column_norm(m, w));
    for (const auto& tag : tags) {
      const Rational norm = tag.operator_norm(m);
      for (int s = 0; s < 10; ++s) {
        const QVector x = random_vector(rng, n, -4, 4, 3);
        EXPECT_LE(tag.vector_norm(m * x), norm * tag.vector_norm(x));
      }
    }
    // Equality witnesses: the all-ones vector for sup, a unit vector for l1.
    EXPECT_EQ(NormTag::sup().vector_norm(m * QVector(n, Rational(1))), max_row_sum(m));
  }
}

TEST(OperatorNorm, SubmultiplicativeOnRandomPairs) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const NormTag tag = trial % 2 ? NormTag::sup() : NormTag::one();
    const PositiveMatrixOperator t(random_matrix(rng, n, n, 0, 3, 4, 1), tag);
    const PositiveMatrixOperator u(random_matrix(rng, n, n, 0, 3, 4, 1), tag);
    const PositiveMatrixOperator tu(t.matrix() * u.matrix(), tag);
    EXPECT_LE(operator_norm(tu), operator_norm(t) * operator_norm(u));
  }
}

TEST(Operator, ValidatesInput) {
  EXPECT_THROW(PositiveMatrixOperator(QMatrix{{1, -1}, {0, 1}}), InvalidInput);
  EXPECT_THROW(PositiveMatrixOperator(QMatrix(2, 3)), InvalidInput);
  EXPECT_THROW(PositiveMatrixOperator(QMatrix::identity(2), NormTag::weighted_one({1, 1, 1})), InvalidInput);
  EXPECT_THROW(OperatorFamily({}), InvalidInput);
  EXPECT_THROW(OperatorFamily({PositiveMatrixOperator(QMatrix::identity(2)),
                               PositiveMatrixOperator(QMatrix::identity(3))}),
               InvalidInput);
  EXPECT_THROW(OperatorFamily({PositiveMatrixOperator(QMatrix::identity(2)),
                               PositiveMatrixOperator(QMatrix::identity(2), NormTag::one())}),
               InvalidInput);
}

TEST(Operator, FamilyRejectsEveryNonCommutingPair) {
  Rng rng(33);
  int rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    const QMatrix a = random_positive_contraction(rng, n);
    const QMatrix b = random_positive_contraction(rng, n);
    const bool commute = a * b == b * a;
    if (commute) {
      EXPECT_NO_THROW(OperatorFamily({PositiveMatrixOperator(a), PositiveMatrixOperator(b)}));
    } else {
      ++rejected;
      EXPECT_THROW(OperatorFamily({PositiveMatrixOperator(a), PositiveMatrixOperator(b)}), InvalidInput);
    }
  }
  EXPECT_GT(rejected, 100);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PositiveMatrixOperator> members;
    for (const auto& m : random_commuting_family(rng, static_cast<std::size_t>(uniform_int(rng, 1, 6)))) {
      members.emplace_back(m);
    }
    EXPECT_NO_THROW(OperatorFamily{members});
  }
}

TEST(PowerBound, KnownVerdicts) {
  EXPECT_EQ(power_bounded_verdict(QMatrix{{1, 0, 0}, {1, 1, 1}, {0, 0, 1}}).verdict, PowerBound::No);
  EXPECT_EQ(power_bounded_verdict(QMatrix{{1, 1}, {0, 1}}).verdict, PowerBound::No);
  EXPECT_EQ(power_bounded_verdict(QMatrix{{0, 1}, {1, 0}}).verdict, PowerBound::Yes);
  EXPECT_EQ(power_bounded_verdict(QMatrix{{Rational(1, 2), 1}, {0, Rational(1, 3)}}).verdict, PowerBound::Yes);
  EXPECT_EQ(power_bounded_verdict(QMatrix{{2}}).verdict, PowerBound::No);
  const auto r = power_bounded_verdict(QMatrix{{1, 1}, {0, 1}});
  ASSERT_TRUE(r.offending_factor.has_value());
  EXPECT_EQ(*r.offending_factor, QPolynomial::linear_root(1));
}

TEST(PowerBound, YesVerdictKeepsPowerNormsBounded) {
  Rng rng(34);
  int yes = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const QMatrix m = scaled_contraction(rng, n);
    const auto verdict = power_bounded_verdict(m).verdict;
    ASSERT_NE(verdict, PowerBound::Unknown);
    if (verdict != PowerBound::Yes) continue;
    ++yes;
    QMatrix p = QMatrix::identity(n);
    Rational up_to_32 = 0;
    Rational up_to_64 = 0;
    for (unsigned k = 1; k <= 64; ++k) {
      p = p * m;
      const Rational norm = max_row_sum(p);
      if (k <= 32) up_to_32 = std::max(up_to_32, norm);
      up_to_64 = std::max(up_to_64, norm);
    }
    EXPECT_LE(up_to_64, 2 * up_to_32);
  }
  EXPECT_GT(yes, 20);
}

TEST(PowerBound, NoVerdictMeansGrowth) {
  Rng rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const QMatrix m = scaled_contraction(rng, n);
    if (power_bounded_verdict(m).verdict != PowerBound::No) continue;
    EXPECT_GT(max_row_sum(m.power(64)), max_row_sum(m.power(16)));
  }
}

TEST(Contraction, ModulusOfFixedVectorIsFixedUnderStrictlyMonotoneNorms) {
  Rng rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const QMatrix s = random_l1_contraction_with_fixed_space(rng, n);
    QMatrix t = s;
    NormTag tag = NormTag::one();
    if (trial % 2) {
      // Similar operator, contractive for the weighted l1 norm.
      QVector w(n);
      for (auto& x : w) x = random_rational(rng, 1, 6, 4);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t(i, j) = s(i, j) * w[j] / w[i];
      }
      tag = NormTag::weighted_one(w);
    }
    const PositiveMatrixOperator op(t, tag);
    ASSERT_TRUE(contraction_check(op));
    const auto fixed = kernel_basis(QMatrix::identity(n) - t);
    ASSERT_FALSE(fixed.empty());
    for (const auto& f : fixed) EXPECT_EQ(t * modulus(f), modulus(f));
    QVector mix(n);
    for (const auto& f : fixed) mix = mix + random_rational(rng, -3, 3, 2) * f;
    EXPECT_EQ(t * modulus(mix), modulus(mix));
  }
}

TEST(Contraction, SupNormAllowsNonLatticeFixedSpaces) {
  const PositiveMatrixOperator s(QMatrix{{1, 0, 0}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}, {0, 0, 1}});
  EXPECT_TRUE(contraction_check(s));
  EXPECT_FALSE(is_strictly_monotone(s.norm()));
  const QVector f{1, 0, -1};
  EXPECT_EQ(s.matrix() * f, f);
  EXPECT_NE(s.matrix() * modulus(f), modulus(f));
  EXPECT_TRUE(super_fixed_check(s, modulus(f)));
}
