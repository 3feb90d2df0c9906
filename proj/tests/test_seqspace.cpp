#include <gtest/gtest.h>

#include <algorithm>

#include "latfix/errors.hpp"
#include "latfix/seqspace.hpp"
#include "support.hpp"

using namespace latfix;
using namespace latfix::testing;

namespace {

ChainValue random_chain(Rng& rng, SpaceTag tag, long lo, long hi) {
  ChainValue c;
  const auto len = uniform_int(rng, 0, 4);
  for (long i = 0; i < len; ++i) c.prefix.push_back(random_rational(rng, lo, hi, 3));
  c.tail = tag == SpaceTag::CZero ? Rational(0) : random_rational(rng, lo, hi, 3);
  c.canonicalize();
  return c;
}

SymbolicVector random_symbolic(Rng& rng, const IndexSchema& s, long lo, long hi) {
  SymbolicVector v = SymbolicVector::zero(s);
  for (auto& x : v.finite) x = random_rational(rng, lo, hi, 3);
  for (std::size_t c = 0; c < s.chains.size(); ++c) v.chains[c] = random_chain(rng, s.chains[c].tag, lo, hi);
  for (std::size_t g = 0; g < s.grids.size(); ++g) {
    const auto rows = uniform_int(rng, 0, 3);
    for (long k = 0; k < rows; ++k) v.grids[g].rows.push_back(random_chain(rng, s.grids[g].tag, lo, hi));
  }
  v.canonicalize();
  return v;
}

Rational chain_at(const SymbolicVector& v, std::size_t c, std::size_t p) { return v.chains[c].at(p); }

SymbolicVector norm_witness(const IndexSchema& s) {
  SymbolicVector v = SymbolicVector::zero(s);
  for (auto& x : v.finite) x = 1;
  for (std::size_t c = 0; c < s.chains.size(); ++c) {
    if (s.chains[c].tag == SpaceTag::LInfty) v.chains[c].tail = 1;
  }
  for (std::size_t g = 0; g < s.grids.size(); ++g) {
    ChainValue row;
    row.tail = s.grids[g].tag == SpaceTag::LInfty ? 1 : 0;
    v.grids[g].rows.push_back(row);
  }
  v.canonicalize();
  return v;
}

std::vector<ShiftInsertOperator> example_operators() {
  std::vector<ShiftInsertOperator> ops;
  for (const auto& name : builtin_operator_names()) {
    ops.push_back(builtin_operator(name));
    ops.push_back(builtin_operator(name).power(2));
  }
  return ops;
}

}  // namespace

TEST(SymbolicVector, ValidationAndCanonicalForm) {
  const IndexSchema s{{"a"}, {{"n", SpaceTag::CZero}}, {}};
  SymbolicVector v = SymbolicVector::zero(s);
  v.chains[0].tail = 1;
  EXPECT_THROW(check_vector(s, v), InvalidInput);
  EXPECT_THROW((IndexSchema{{"a", "a"}, {}, {}}.validate()), InvalidInput);
  ChainValue c{{1, 2, 2}, 2};
  c.canonicalize();
  EXPECT_EQ(c, (ChainValue{{1}, 2}));
  EXPECT_EQ(c.at(0), 1);
  EXPECT_EQ(c.at(100), 2);
}

TEST(SymbolicVector, LatticeOperationsArePointwise) {
  const IndexSchema s{{"a", "b"}, {{"n", SpaceTag::LInfty}}, {{"k", SpaceTag::LInfty}}};
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const SymbolicVector u = random_symbolic(rng, s, -4, 4);
    const SymbolicVector v = random_symbolic(rng, s, -4, 4);
    const SymbolicVector m = modulus(u);
    const SymbolicVector j = pointwise_sup(u, v);
    const SymbolicVector sum = u + v;
    for (std::size_t p = 0; p < 8; ++p) {
      EXPECT_EQ(chain_at(m, 0, p), abs(chain_at(u, 0, p)));
      EXPECT_EQ(chain_at(j, 0, p), std::max(chain_at(u, 0, p), chain_at(v, 0, p)));
      EXPECT_EQ(chain_at(sum, 0, p), chain_at(u, 0, p) + chain_at(v, 0, p));
      for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(j.grids[0].row(k).at(p), std::max(u.grids[0].row(k).at(p), v.grids[0].row(k).at(p)));
      }
    }
    EXPECT_TRUE(leq(u, j));
    EXPECT_TRUE(leq(v, j));
    EXPECT_TRUE(is_nonnegative(m));
    EXPECT_EQ(sup_norm(m), sup_norm(u));
    EXPECT_EQ(u + (-u), SymbolicVector::zero(s));
  }
}

TEST(ShiftInsert, ApplyPreservesPositivity) {
  Rng rng(42);
  for (const auto& op : example_operators()) {
    for (int trial = 0; trial < 100; ++trial) {
      const SymbolicVector v = random_symbolic(rng, op.schema(), 0, 5);
      EXPECT_TRUE(is_nonnegative(apply(op, v)));
    }
  }
}

TEST(ShiftInsert, NormBoundsEveryVectorAndIsAttained) {
  Rng rng(43);
  for (const auto& op : example_operators()) {
    const Rational norm = symbolic_operator_norm(op);
    for (int trial = 0; trial < 100; ++trial) {
      const SymbolicVector v = random_symbolic(rng, op.schema(), -5, 5);
      EXPECT_LE(sup_norm(apply(op, v)), norm * sup_norm(v));
    }
    const SymbolicVector w = norm_witness(op.schema());
    EXPECT_EQ(sup_norm(apply(op, w)), norm * sup_norm(w));
  }
  EXPECT_EQ(symbolic_operator_norm(builtin_operator("e41")), 1);
  EXPECT_EQ(symbolic_operator_norm(builtin_operator("e42")), 1);
  EXPECT_EQ(symbolic_operator_norm(builtin_operator("e43")), 2);
  EXPECT_EQ(symbolic_operator_norm(builtin_operator("e43").power(3)), 2);
}

TEST(ShiftInsert, PowersAgreeWithRepeatedApplication) {
  Rng rng(44);
  for (const auto& name : builtin_operator_names()) {
    const ShiftInsertOperator op = builtin_operator(name);
    for (unsigned k = 1; k <= 4; ++k) {
      const ShiftInsertOperator pk = op.power(k);
      EXPECT_EQ(pk.shift(), k);
      for (int trial = 0; trial < 20; ++trial) {
        const SymbolicVector v = random_symbolic(rng, op.schema(), -3, 3);
        SymbolicVector w = v;
        for (unsigned i = 0; i < k; ++i) w = apply(op, w);
        EXPECT_EQ(apply(pk, v), w);
      }
    }
  }
  EXPECT_THROW(builtin_operator("e41").power(0), InvalidInput);
  EXPECT_THROW(builtin_operator("nope"), InvalidInput);
}

TEST(ShiftInsert, EigenvectorsSatisfyTheEigenEquation) {
  for (const auto& op : example_operators()) {
    for (const Rational& lambda : {Rational(1), Rational(-1)}) {
      for (const auto& v : symbolic_eigenspace(op, lambda)) {
        EXPECT_EQ(apply(op, v), lambda * v);
        EXPECT_NE(v, SymbolicVector::zero(op.schema()));
      }
    }
  }
  EXPECT_EQ(symbolic_eigenspace(builtin_operator("e41"), 1).size(), 1u);
  EXPECT_EQ(symbolic_eigenspace(builtin_operator("e42"), 1).size(), 2u);
  EXPECT_EQ(symbolic_eigenspace(builtin_operator("e43"), 1).size(), 0u);
  EXPECT_EQ(symbolic_eigenspace(builtin_operator("e43"), -1).size(), 1u);
}

TEST(OrbitSup, StabilizedSupremumDominatesTheOrbitAndIsLeast) {
  const ShiftInsertOperator op = builtin_operator("e42");
  const auto fixed = symbolic_eigenspace(op, 1);
  Rng rng(45);
  int stabilized = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Fixed finite part, nonincreasing chain below the inserted value.
    SymbolicVector g = SymbolicVector::zero(op.schema());
    g.finite = Rational(uniform_int(rng, -3, 3)) * fixed[0].finite + Rational(uniform_int(rng, 0, 3)) * fixed[1].finite;
    const Rational entry = (g.finite[0] + g.finite[2]) / 2;
    if (entry < 0) continue;
    Rational level = entry;
    const auto len = uniform_int(rng, 0, 3);
    for (long i = 0; i < len; ++i) {
      level = std::max(Rational(0), Rational(level - random_rational(rng, 0, 2, 2)));
      g.chains[0].prefix.push_back(level);
    }
    g.chains[0].tail = std::max(Rational(0), Rational(level - random_rational(rng, 0, 1, 2)));
    g.canonicalize();
    ASSERT_TRUE(leq(g, apply(op, g)));

    const OrbitSup r = orbit_sup(op, g);
    ASSERT_EQ(r.outcome, OrbitOutcome::Stabilized);
    ++stabilized;
    const SymbolicVector& s = r.sup;
    EXPECT_TRUE(leq(s, apply(op, s)));
    SymbolicVector x = g;
    for (int k = 0; k <= 64; ++k) {
      EXPECT_TRUE(leq(x, s));
      x = apply(op, x);
    }
    for (int sample = 0; sample < 50; ++sample) {
      const SymbolicVector u = random_rational(rng, -4, 4, 2) * fixed[0] + random_rational(rng, 0, 6, 2) * fixed[1];
      if (leq(g, u)) {
        EXPECT_TRUE(leq(s, u));
      }
    }
    // Truncation consistency against brute-force iteration.
    for (std::size_t n : {1u, 8u, 64u}) {
      std::vector<Rational> brute_g(n);
      std::vector<Rational> brute_h(n);
      SymbolicVector y = g;
      for (std::size_t p = 0; p < n; ++p) {
        brute_g[p] = chain_at(y, 0, p);
        brute_h[p] = chain_at(y, 1, p);
      }
      for (std::size_t k = 0; k < n + 8; ++k) {
        y = apply(op, y);
        for (std::size_t p = 0; p < n; ++p) {
          brute_g[p] = std::max(brute_g[p], chain_at(y, 0, p));
          brute_h[p] = std::max(brute_h[p], chain_at(y, 1, p));
        }
      }
      for (std::size_t p = 0; p < n; ++p) {
        EXPECT_EQ(chain_at(s, 0, p), brute_g[p]);
        EXPECT_EQ(chain_at(s, 1, p), brute_h[p]);
      }
    }
  }
  EXPECT_GT(stabilized, 10);
}

TEST(OrbitSup, ReportsTheKnownOutcomes) {
  const ShiftInsertOperator e41 = builtin_operator("e41");
  SymbolicVector g = SymbolicVector::zero(e41.schema());
  g.finite = {1, 1};
  // Ones accumulate along a c0 chain: the supremum has limit 1 and leaves c0.
  EXPECT_THROW(orbit_sup(e41, g), DomainError);
  g.finite = {1, -1};
  const OrbitSup fixed = orbit_sup(e41, g);
  EXPECT_EQ(fixed.outcome, OrbitOutcome::Stabilized);
  EXPECT_EQ(fixed.sup, g);
  g.finite = {-1, -1};
  EXPECT_EQ(orbit_sup(e41, g).outcome, OrbitOutcome::NotSuperFixed);

  const ShiftInsertOperator square = builtin_operator("e43").power(2);
  SymbolicVector h = SymbolicVector::zero(square.schema());
  h.finite = {1, 1};
  const OrbitSup r = orbit_sup(square, h);
  ASSERT_EQ(r.outcome, OrbitOutcome::Unbounded);
  EXPECT_EQ(r.evidence_norms, (std::vector<Rational>{1, 2, 4}));
}

TEST(Flattening, IsAnOrderIsomorphism) {
  const IndexSchema s{{"a", "b"}, {{"n", SpaceTag::CZero}, {"m", SpaceTag::LInfty}}, {{"k", SpaceTag::LInfty}}};
  Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const SymbolicVector u = random_symbolic(rng, s, -3, 3);
    const SymbolicVector v = random_symbolic(rng, s, -3, 3);
    const Flattening flat(s, {u, v, u + v, pointwise_sup(u, v)});
    EXPECT_EQ(flat.unflatten(flat.flatten(u)), u);
    EXPECT_EQ(flat.flatten(u + v), flat.flatten(u) + flat.flatten(v));
    EXPECT_EQ(flat.flatten(pointwise_sup(u, v)), componentwise_max(flat.flatten(u), flat.flatten(v)));
    EXPECT_EQ(leq(u, v), leq(flat.flatten(u), flat.flatten(v)));
    EXPECT_EQ(sup_norm(flat.flatten(u)), sup_norm(u));
  }
}
