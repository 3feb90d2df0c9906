#include "latfix/fixlattice.hpp"

#include <algorithm>

#include "latfix/linalg.hpp"
#include "latfix/spectral.hpp"

namespace latfix {

Subspace fixed_space_of_family(const OperatorFamily& family) {
  const std::size_t n = family.dim();
  std::vector<QVector> rows;
  for (const auto& t : family.members()) {
    const QMatrix a = QMatrix::identity(n) - t.matrix();
    for (auto& r : a.row_list()) rows.push_back(std::move(r));
  }
  return Subspace(n, kernel_basis(QMatrix(rows)));
}

const char* to_string(Conformance c) {
  switch (c) {
    case Conformance::Conformant:
      return "Conformant";
    case Conformance::Violation:
      return "Violation";
    case Conformance::NotApplicable:
      return "NotApplicable";
  }
  return "?";
}

namespace {

bool all_contractive(const OperatorFamily& family) {
  return std::all_of(family.members().begin(), family.members().end(),
                     [](const PositiveMatrixOperator& t) { return contraction_check(t); });
}

LatticeClassification trivial_classification() {
  LatticeClassification c;
  c.verdict = LatticeVerdict::Sublattice;
  c.cone_generating = c.cone_simplicial = c.rays_support_disjoint = true;
  return c;
}

}  // namespace

FixedSpaceReport fixed_space_report(const OperatorFamily& family) {
  FixedSpaceReport r;
  r.contractive = all_contractive(family);
  r.family_valid = r.contractive && r.commuting;
  r.strictly_monotone_norm = is_strictly_monotone(family.norm());
  r.fixed_space = fixed_space_of_family(family);
  r.classification =
      r.fixed_space.is_zero() ? trivial_classification() : classify_subspace(r.fixed_space);

  const NormTag& norm = family.norm();
  for (std::size_t i = 0; i < r.fixed_space.dim(); ++i) {
    const QVector& b = r.fixed_space.basis()[i];
    NormCheck c;
    c.description = "{b" + std::to_string(i) + ", -b" + std::to_string(i) + "}";
    c.g_e = modulus(b);
    c.norm_e = norm.vector_norm(c.g_e);
    c.g_f = modulus_in(r.fixed_space, b);
    if (c.g_f) {
      c.norm_f = norm.vector_norm(*c.g_f);
      c.dominated = leq(c.g_e, *c.g_f);
      c.equal = c.norm_e == c.norm_f;
    }
    r.norm_checks.push_back(std::move(c));
  }

  if (!r.family_valid) {
    r.conformance = Conformance::NotApplicable;
    return r;
  }
  if (r.classification.verdict == LatticeVerdict::NotLatticeSubspace) {
    r.violations.push_back("fixed space of a contractive family is not a lattice subspace");
  }
  if (r.strictly_monotone_norm && r.classification.verdict != LatticeVerdict::Sublattice) {
    r.violations.push_back("fixed space under a strictly monotone norm is not a sublattice");
  }
  for (const auto& c : r.norm_checks) {
    if (!c.g_f) {
      r.violations.push_back("no supremum of " + c.description + " in the fixed space");
    } else if (!c.dominated || !c.equal) {
      r.violations.push_back("supremum of " + c.description + " breaks the order or norm relation");
    }
  }
  r.conformance = r.violations.empty() ? Conformance::Conformant : Conformance::Violation;
  return r;
}

SupInFix sup_in_fixspace(const OperatorFamily& family, const std::vector<QVector>& g) {
  if (!all_contractive(family)) throw DomainError("sup_in_fixspace needs a contractive family");
  if (g.empty()) throw DomainError("sup_in_fixspace needs a nonempty set");
  const Subspace f = fixed_space_of_family(family);
  SupInFix out;
  out.g_e = g.front();
  for (const auto& v : g) {
    if (v.size() != family.dim() || !f.contains(v)) throw DomainError("vector outside the fixed space");
    out.g_e = componentwise_max(out.g_e, v);
  }
  const auto sup = least_upper_bound_in(f, g);
  if (!sup) throw TheoremViolation("no supremum in the fixed space of a contractive family");
  out.g_f = *sup;
  out.norm_e = family.norm().vector_norm(out.g_e);
  out.norm_f = family.norm().vector_norm(out.g_f);
  if (!leq(out.g_e, out.g_f)) throw TheoremViolation("fixed-space supremum is not above the ambient one");
  if (is_nonnegative(out.g_e) && out.norm_e != out.norm_f) {
    throw TheoremViolation("norms of ambient and fixed-space suprema differ");
  }
  return out;
}

QVector least_fixed_above(const OperatorFamily& family, const QVector& g) {
  if (!all_contractive(family)) throw DomainError("least_fixed_above needs a contractive family");
  for (const auto& t : family.members()) {
    if (!super_fixed_check(t, g)) throw DomainError("vector is not super fixed");
  }
  const auto least = least_element_above(fixed_space_of_family(family), g);
  if (!least) throw TheoremViolation("no least fixed vector above a super fixed vector");
  if (is_nonnegative(g) && family.norm().vector_norm(*least) != family.norm().vector_norm(g)) {
    throw TheoremViolation("least fixed vector above a positive vector changed the norm");
  }
  return *least;
}

const char* to_string(TraceOutcome o) {
  return o == TraceOutcome::FixedPointReached ? "FixedPointReached" : "Unbounded";
}

TransfiniteTrace<QVector> transfinite_trace(const PositiveMatrixOperator& t,
                                            const std::vector<QVector>& g, std::size_t budget) {
  if (g.empty()) throw DomainError("transfinite_trace needs a nonempty set");
  const QMatrix& m = t.matrix();
  TransfiniteTrace<QVector> trace;
  trace.start = g.front();
  for (const auto& v : g) {
    if (v.size() != t.dim() || !(m * v == v)) throw DomainError("transfinite_trace: vector is not fixed");
    trace.start = componentwise_max(trace.start, v);
  }
  if (power_bounded_verdict(m).verdict != PowerBound::Yes) {
    throw Unsupported("transfinite_trace: operator is not power bounded");
  }
  const QMatrix p = fix_projection(m);
  QVector current = trace.start;
  for (std::size_t step = 1; step <= budget; ++step) {
    // The increasing orbit of a super fixed vector converges to its projection.
    current = p * current;
    const bool fixed = m * current == current;
    trace.steps.push_back({step, current, t.norm().vector_norm(current), fixed});
    if (fixed) {
      trace.outcome = TraceOutcome::FixedPointReached;
      trace.fixed_point = current;
      trace.limit_steps = step;
      return trace;
    }
  }
  throw LimitStepBudgetExceeded("transfinite_trace: limit step budget exhausted");
}

TransfiniteTrace<SymbolicVector> transfinite_trace(const ShiftInsertOperator& op,
                                                   const std::vector<SymbolicVector>& g,
                                                   std::size_t budget) {
  if (g.empty()) throw DomainError("transfinite_trace needs a nonempty set");
  TransfiniteTrace<SymbolicVector> trace;
  trace.start = g.front();
  for (const auto& v : g) {
    check_vector(op.schema(), v);
    if (!(op.apply(v) == v)) throw DomainError("transfinite_trace: vector is not fixed");
    trace.start = pointwise_sup(trace.start, v);
  }
  SymbolicVector current = trace.start;
  for (std::size_t step = 1; step <= budget; ++step) {
    OrbitSup r = orbit_sup(op, current);
    if (r.outcome == OrbitOutcome::NotSuperFixed) {
      throw std::logic_error("transfinite_trace: limit step produced a vector that is not super fixed");
    }
    if (r.outcome == OrbitOutcome::Unbounded) {
      for (std::size_t i = 0; i < r.evidence.size(); ++i) {
        trace.steps.push_back({step + i, r.evidence[i], r.evidence_norms[i], false});
      }
      trace.outcome = TraceOutcome::Unbounded;
      trace.growth_norms = r.evidence_norms;
      return trace;
    }
    current = std::move(r.sup);
    const bool fixed = op.apply(current) == current;
    trace.steps.push_back({step, current, sup_norm(current), fixed});
    if (fixed) {
      trace.outcome = TraceOutcome::FixedPointReached;
      trace.fixed_point = current;
      trace.limit_steps = step;
      return trace;
    }
  }
  throw LimitStepBudgetExceeded("transfinite_trace: limit step budget exhausted");
}

SymbolicClassification classify_symbolic_span(const IndexSchema& schema,
                                              const std::vector<SymbolicVector>& vectors) {
  const Flattening flat(schema, vectors);
  std::vector<QVector> flattened;
  for (const auto& v : vectors) flattened.push_back(flat.flatten(v));
  const Subspace f(flat.dim(), flattened);
  SymbolicClassification out;
  if (f.is_zero()) {
    out.classification = trivial_classification();
    return out;
  }
  out.classification = classify_subspace(f);
  for (const auto& r : out.classification.rays) out.rays.push_back(flat.unflatten(r));
  return out;
}

}  // namespace latfix
