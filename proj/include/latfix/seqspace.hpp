#pragma once

#include <string>
#include <vector>

#include "latfix/matrix.hpp"

namespace latfix {

// Exact model of sequence spaces built from a finite block of coordinates,
// chains (copies of N_0 with values in c0 or l-infinity) and grids (copies of
// N_0 x N_0, each row a chain). Vectors are restricted to the representable
// class: every chain is eventually constant (finite prefix plus tail value)
// and every grid has finitely many nonzero rows. This class is a sublattice
// of the full space, it contains every vector the operators below produce
// from representable input, and on it the limit along any free ultrafilter
// equals the tail value. Both spaces are Dedekind complete with the Fatou
// property; l-infinity is monotonically complete, c0 is not.

enum class SpaceTag { CZero, LInfty };

const char* to_string(SpaceTag t);

struct NamedSpace {
  std::string name;
  SpaceTag tag = SpaceTag::LInfty;
  bool operator==(const NamedSpace&) const = default;
};

struct IndexSchema {
  std::vector<std::string> finite_coords;
  std::vector<NamedSpace> chains;
  std::vector<NamedSpace> grids;

  /// Throws InvalidInput on duplicate names.
  void validate() const;
  bool operator==(const IndexSchema&) const = default;
};

/// Eventually constant sequence: prefix, then the tail value forever.
struct ChainValue {
  std::vector<Rational> prefix;
  Rational tail;

  Rational at(std::size_t position) const;
  /// Drops trailing prefix entries equal to the tail.
  void canonicalize();
  bool is_zero() const { return prefix.empty() && sgn(tail) == 0; }
  bool operator==(const ChainValue&) const = default;
};

/// Grid with explicit rows 0..K and zero rows beyond.
struct GridValue {
  std::vector<ChainValue> rows;

  ChainValue row(std::size_t k) const;
  void canonicalize();
  bool operator==(const GridValue&) const = default;
};

struct SymbolicVector {
  QVector finite;
  std::vector<ChainValue> chains;
  std::vector<GridValue> grids;

  static SymbolicVector zero(const IndexSchema& schema);
  void canonicalize();
  bool operator==(const SymbolicVector&) const = default;
};

/// Throws InvalidInput when v does not fit the schema or a c0 tail is nonzero.
void check_vector(const IndexSchema& schema, const SymbolicVector& v);

SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b);
SymbolicVector operator*(const Rational& s, const SymbolicVector& v);
SymbolicVector operator-(const SymbolicVector& v);
bool leq(const SymbolicVector& a, const SymbolicVector& b);
bool is_nonnegative(const SymbolicVector& v);
Rational sup_norm(const SymbolicVector& v);
SymbolicVector modulus(const SymbolicVector& v);

/// Coordinatewise maximum.
SymbolicVector pointwise_sup(const SymbolicVector& u, const SymbolicVector& v);

enum class TermKind { Finite, ChainTail };

struct FunctionalTerm {
  TermKind kind = TermKind::Finite;
  std::size_t index = 0;
  Rational coefficient;
  bool operator==(const FunctionalTerm&) const = default;
};

/// Finite linear combination of finite coordinates and chain tail limits.
struct LinearFunctionalSpec {
  std::vector<FunctionalTerm> terms;

  Rational evaluate(const SymbolicVector& v) const;
  /// Merges repeated references, drops zero terms, sorts.
  void normalize();
  bool operator==(const LinearFunctionalSpec&) const = default;
};

/// Entry sources of one grid: row 0 is fed by functionals, row k >= 1 by
/// cross[j] times the tail limit of row k - 1.
struct GridSource {
  std::vector<LinearFunctionalSpec> row0;
  std::vector<Rational> cross;
  bool operator==(const GridSource&) const = default;
};

/// Positive operator that acts on the finite block by a matrix and shifts
/// every chain (and every grid row) by `shift` positions, writing `shift` new
/// entries at the front. Powers of such an operator have the same form, with
/// the shift multiplied.
class ShiftInsertOperator {
 public:
  /// Throws InvalidInput on shape mismatches or negative coefficients.
  ShiftInsertOperator(IndexSchema schema, QMatrix block,
                      std::vector<std::vector<LinearFunctionalSpec>> chain_entries,
                      std::vector<GridSource> grid_entries, unsigned shift = 1);

  const IndexSchema& schema() const { return schema_; }
  const QMatrix& block() const { return block_; }
  unsigned shift() const { return shift_; }
  const std::vector<std::vector<LinearFunctionalSpec>>& chain_entries() const {
    return chain_entries_;
  }
  const std::vector<GridSource>& grid_entries() const { return grid_entries_; }

  SymbolicVector apply(const SymbolicVector& v) const;
  /// this o inner
  ShiftInsertOperator compose(const ShiftInsertOperator& inner) const;
  ShiftInsertOperator power(unsigned k) const;

  bool operator==(const ShiftInsertOperator&) const = default;

 private:
  IndexSchema schema_;
  QMatrix block_;
  std::vector<std::vector<LinearFunctionalSpec>> chain_entries_;
  std::vector<GridSource> grid_entries_;
  unsigned shift_ = 1;
};

SymbolicVector apply(const ShiftInsertOperator& op, const SymbolicVector& v);

/// Exact norm for the sup norm: the largest l1 mass of a defining functional.
Rational symbolic_operator_norm(const ShiftInsertOperator& op);

/// Canonical basis of {v representable : op v = lambda v}, lambda = +-1.
std::vector<SymbolicVector> symbolic_eigenspace(const ShiftInsertOperator& op,
                                                const Rational& lambda);

enum class OrbitOutcome { Stabilized, Unbounded, NotSuperFixed };

const char* to_string(OrbitOutcome o);

struct OrbitSup {
  OrbitOutcome outcome = OrbitOutcome::NotSuperFixed;
  SymbolicVector sup;  // Stabilized only
  // Unbounded: successive limit steps and their norms.
  std::vector<SymbolicVector> evidence;
  std::vector<Rational> evidence_norms;
};

inline constexpr std::size_t kUnboundedEvidenceSteps = 3;

/// Supremum of the increasing orbit (op^n g), in closed form. Requires the
/// finite block to be power bounded (Unsupported otherwise); a defective
/// eigenvalue 1 raises DefectiveFixedSpace. Throws DomainError when the
/// supremum leaves the space (a c0 chain with a nonzero limit) and
/// Unsupported when it is not representable.
OrbitSup orbit_sup(const ShiftInsertOperator& op, const SymbolicVector& g);

/// Built-in operators: "e41", "e42", "e43". Throws InvalidInput for other names.
ShiftInsertOperator builtin_operator(const std::string& name);
std::vector<std::string> builtin_operator_names();

/// Embeds finitely many representable vectors into Q^m order-isomorphically:
/// finite coordinates, then each chain prefix padded to a common length plus
/// its tail, then each grid row the same way. Coordinatewise order, maxima
/// and sup norms are preserved.
class Flattening {
 public:
  Flattening(const IndexSchema& schema, const std::vector<SymbolicVector>& vectors);

  std::size_t dim() const { return dim_; }
  QVector flatten(const SymbolicVector& v) const;
  SymbolicVector unflatten(const QVector& x) const;

 private:
  IndexSchema schema_;
  std::vector<std::size_t> chain_len_;
  std::vector<std::vector<std::size_t>> grid_row_len_;
  std::size_t dim_ = 0;
};

}  // namespace latfix
