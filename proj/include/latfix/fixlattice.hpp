#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "latfix/lattice.hpp"
#include "latfix/opcore.hpp"
#include "latfix/seqspace.hpp"

namespace latfix {

/// Common fixed space of the family, canonical basis.
Subspace fixed_space_of_family(const OperatorFamily& family);

enum class Conformance { Conformant, Violation, NotApplicable };

const char* to_string(Conformance c);

/// Supremum test for G = {b, -b}: g_E = |b| in the ambient space, g_F the
/// supremum inside the fixed space, both measured in the family's norm.
struct NormCheck {
  std::string description;
  QVector g_e;
  std::optional<QVector> g_f;
  Rational norm_e;
  Rational norm_f;
  bool dominated = false;  // g_E <= g_F
  bool equal = false;      // ||g_F|| == ||g_E||
};

struct FixedSpaceReport {
  bool contractive = false;
  bool commuting = true;  // guaranteed by OperatorFamily
  bool family_valid = false;
  Subspace fixed_space;
  LatticeClassification classification;
  bool strictly_monotone_norm = false;
  Conformance conformance = Conformance::NotApplicable;
  std::vector<std::string> violations;
  std::vector<NormCheck> norm_checks;

  bool theorem_conformant() const { return conformance != Conformance::Violation; }
};

/// Validates the family, computes and classifies its fixed space and checks
/// the predicted order structure: a lattice subspace for contractive families,
/// a sublattice when the norm is strictly monotone, and equality of norms
/// between ambient and fixed-space suprema of {b, -b}. The zero fixed space
/// is reported as a trivial sublattice.
FixedSpaceReport fixed_space_report(const OperatorFamily& family);

struct SupInFix {
  QVector g_e;
  QVector g_f;
  Rational norm_e;
  Rational norm_f;
};

/// Supremum of G in the fixed space next to the ambient supremum. Throws
/// DomainError for an invalid family or G outside the fixed space, and
/// TheoremViolation when the supremum is missing or the norm or order
/// relations between the two fail.
SupInFix sup_in_fixspace(const OperatorFamily& family, const std::vector<QVector>& g);

/// Smallest common fixed vector above the super fixed vector g, by exact LPs.
/// Throws DomainError unless the family is valid and g is super fixed for
/// every member; TheoremViolation when no least element exists or its norm
/// differs from that of a positive g.
QVector least_fixed_above(const OperatorFamily& family, const QVector& g);

inline constexpr std::size_t kLimitStepBudget = 8;

class LimitStepBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TraceOutcome { FixedPointReached, Unbounded };

const char* to_string(TraceOutcome o);

template <typename Vector>
struct TraceStep {
  std::size_t limit_step = 0;
  Vector vector;
  Rational norm;
  bool is_fixed = false;
};

/// Repeated orbit suprema starting from the ambient supremum of G.
template <typename Vector>
struct TransfiniteTrace {
  Vector start;
  std::vector<TraceStep<Vector>> steps;
  TraceOutcome outcome = TraceOutcome::FixedPointReached;
  Vector fixed_point;  // FixedPointReached only
  std::size_t limit_steps = 0;
  std::vector<Rational> growth_norms;  // Unbounded only
};

/// Matrix case: one limit step, the orbit limit given by the projection onto
/// the fixed space. Every element of G must be fixed by t.
TransfiniteTrace<QVector> transfinite_trace(const PositiveMatrixOperator& t,
                                            const std::vector<QVector>& g,
                                            std::size_t budget = kLimitStepBudget);

/// Symbolic case: limit steps by orbit_sup until the result is fixed. Throws
/// LimitStepBudgetExceeded after `budget` steps without reaching a fixed point.
TransfiniteTrace<SymbolicVector> transfinite_trace(const ShiftInsertOperator& op,
                                                   const std::vector<SymbolicVector>& g,
                                                   std::size_t budget = kLimitStepBudget);

/// Classification of the span of representable vectors, computed on an
/// order-isomorphic flattening; rays are returned as symbolic vectors.
struct SymbolicClassification {
  LatticeClassification classification;
  std::vector<SymbolicVector> rays;
};

SymbolicClassification classify_symbolic_span(const IndexSchema& schema,
                                              const std::vector<SymbolicVector>& vectors);

}  // namespace latfix
