#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latfix/cone.hpp"

namespace latfix {

// Order structure of a subspace F of Q^n under the coordinatewise order.
//
// A finite-dimensional ordered space with a closed cone is a vector lattice
// exactly when the cone is generating and simplicial: then the extreme rays
// r_1..r_d form a basis, every x = sum c_i r_i, and x v y has coordinates
// max(c_i, c'_i). If some vector of F is not a difference of positive
// vectors, {x, -x} has no upper bound in F at all; if there are more than d
// extreme rays, the cone is not a lattice cone and some pair lacks a
// least upper bound. The lattice operations of F agree with the coordinatewise
// ones iff the rays have pairwise disjoint supports (atoms of a sublattice are
// disjoint, and disjointly supported rays are closed under |.|).

enum class LatticeVerdict { NotLatticeSubspace, LatticeSubspaceOnly, Sublattice };

const char* to_string(LatticeVerdict v);

struct LatticeClassification {
  LatticeVerdict verdict = LatticeVerdict::NotLatticeSubspace;
  bool cone_generating = false;
  bool cone_simplicial = false;
  bool rays_support_disjoint = false;
  std::vector<QVector> rays;
};

/// F must be nonzero.
LatticeClassification classify_subspace(const Subspace& f);

/// Least element of {z in F : z >= lower}, by one exact LP per coordinate.
/// nullopt when the set is empty or has no least element.
std::optional<QVector> least_element_above(const Subspace& f, const QVector& lower);

/// Supremum of G within F (G nonempty, G ⊆ F).
std::optional<QVector> least_upper_bound_in(const Subspace& f, const std::vector<QVector>& g);

/// Supremum of {x, -x} within F.
std::optional<QVector> modulus_in(const Subspace& f, const QVector& x);

inline constexpr std::size_t kSignPatternMaxDim = 12;

/// Independent sublattice test: for every sign pattern whose cell
/// {v in F : s_i v_i >= 0} is full-dimensional in F, the reflection diag(s)
/// must map F into itself (on such a cell |v| = diag(s) v). Cells are tested
/// by LP feasibility, membership by exact arithmetic. Ambient dim <= 12.
bool sign_pattern_sublattice_oracle(const Subspace& f);

/// Checks ||x v_F y||_inf = max(||x||_inf, ||y||_inf) for random positive
/// pairs built from the extreme rays. F must be a lattice subspace.
bool am_property_check(const Subspace& f, std::size_t trials, std::uint64_t seed);

/// A pair of vectors of F without a supremum in F, searched among {b, -b}
/// for basis vectors and then `attempts` random pairs.
std::optional<std::pair<QVector, QVector>> find_missing_supremum(const Subspace& f,
                                                                 std::size_t attempts,
                                                                 std::uint64_t seed);

}  // namespace latfix
