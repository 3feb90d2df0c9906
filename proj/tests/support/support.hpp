#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "latfix/matrix.hpp"
#include "latfix/opcore.hpp"
#include "latfix/polynomial.hpp"
#include "latfix/random.hpp"
#include "latfix/subspace.hpp"

namespace latfix::testing {

// Independent oracles.

/// Rank by fraction-free (Bareiss) elimination over the integers.
std::size_t bareiss_rank(const QMatrix& m);

std::vector<std::complex<double>> float_roots(const QPolynomial& p);
std::vector<std::complex<double>> float_eigenvalues(const QMatrix& m);
/// n - numerical rank of (m - lambda I), singular values below tol count as zero.
std::size_t float_nullity(const QMatrix& m, std::complex<double> lambda, double tol);
double max_root_modulus(const QPolynomial& p);

// Generators.

QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi, long max_den,
                      int zero_weight = 1);
QPolynomial random_polynomial(Rng& rng, int degree, long lo, long hi, long max_den);

/// Block diagonal of cyclic permutation blocks and a strict contraction,
/// conjugated by a random permutation. Cycle lengths are returned.
QMatrix planted_cyclic_contraction(Rng& rng, std::size_t n, std::vector<std::size_t>* cycles = nullptr);

/// Commuting family of positive sup-norm contractions of size n: either
/// {T, T^2, T^3} or block-diagonal members built from powers of shared blocks.
std::vector<QMatrix> random_commuting_family(Rng& rng, std::size_t n);

/// Positive l1 contraction (column sums <= 1) with a nontrivial fixed space.
QMatrix random_l1_contraction_with_fixed_space(Rng& rng, std::size_t n);

/// Positive sup-norm contraction (row sums <= 1) with a nontrivial fixed space.
QMatrix random_sup_contraction_with_fixed_space(Rng& rng, std::size_t n);

/// Random subspace of Q^n mixing sparse nonnegative and signed generators.
Subspace random_subspace(Rng& rng, std::size_t n);

/// Metzler matrix with sup-norm logarithmic norm <= 0.
QMatrix random_dissipative_metzler(Rng& rng, std::size_t n);

/// Super fixed vector (g <= T g) for a sup-norm contraction T with a
/// nontrivial fixed space: a maximum of terms f - c 1 with f fixed, c >= 0,
/// sometimes together with 0.
QVector random_super_fixed(Rng& rng, const QMatrix& t);

/// Random x >= 0 spanned by the given rays with nonnegative coefficients.
QVector random_cone_point(Rng& rng, const std::vector<QVector>& rays, std::size_t n);

}  // namespace latfix::testing
