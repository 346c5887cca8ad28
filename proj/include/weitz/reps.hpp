#pragma once

#include <utility>
#include <vector>

#include "weitz/branching.hpp"
#include "weitz/linalg.hpp"
#include "weitz/matrix.hpp"

namespace weitz {

/// Explicit matrix realization of an irreducible so(n)-module over the
/// Gaussian rationals. Generators are stored for i < j (0-based indices);
/// pi(i, j) handles the skew symmetry. The inner product is the Hermitian
/// form given by `gram` (the identity for the unitary constructions; a
/// diagonal positive matrix for projected tensor blocks).
struct RepRealization {
  WeightContext ctx;
  DominantWeight rho;
  std::size_t dim = 0;
  std::vector<GMatrix> upper;  // flat n*n array, entries for i < j only
  GMatrix gram;
  bool unitary = true;

  const GMatrix& gen(int i, int j) const {  // requires i < j
    return upper[static_cast<std::size_t>(i) * static_cast<std::size_t>(ctx.n) +
                 static_cast<std::size_t>(j)];
  }

  /// pi(e_ij) for any i, j (zero on the diagonal).
  GMatrix pi(int i, int j) const;

  /// pi of a Lie algebra element given by an antisymmetric coefficient
  /// matrix: sum_{i<j} coeffs(i,j) pi(e_ij).
  GMatrix pi_element(const QMatrix& coeffs) const;

  /// Checks the bracket relations, skew-Hermitian generators, the scalar
  /// quadratic Casimir value, and the Weyl dimension; throws on violation.
  void validate() const;
};

/// pi(e_ij): e_k -> delta_ik e_j - delta_jk e_i on C^n.
RepRealization natural_rep(int n);

/// Derivation extension of the natural action to Lambda^p(C^n). Irreducible
/// with highest weight (1_p) for p < n/2, and for p = m when n = 2m+1.
/// Throws ReducibleRequest for p = m, n = 2m (use exterior_middle_split).
RepRealization exterior_rep(int n, int p);

/// The two irreducible halves (1_m) and (1_{m-1},-1) of Lambda^m(C^{2m}),
/// split by the Pfaffian element. Requires n even, n <= 8.
std::pair<RepRealization, RepRealization> exterior_middle_split(int n);

/// Gamma matrices of size 2^m with gamma_i gamma_j + gamma_j gamma_i =
/// -2 delta_ij, and the generator set pi(e_ij) = (1/2) gamma_i gamma_j.
/// For n even also carries the chirality involution (diagonal, +-1).
struct SpinorConstruction {
  int n = 0;
  std::size_t dim = 0;
  std::vector<GMatrix> gamma;
  std::vector<GMatrix> upper;  // flat n*n, i < j
  GMatrix chirality;           // n even only
};

SpinorConstruction spinor_construction(int n);

/// n odd: the irreducible spinor module ((1/2)_m).
RepRealization spinor_rep(int n);

/// n even: the half-spin modules, first ((1/2)_{m-1}, 1/2) then
/// ((1/2)_{m-1}, -1/2), labels fixed by their Pfaffian eigenvalues.
/// Requires n <= 8 (the Pfaffian sum).
std::pair<RepRealization, RepRealization> half_spin_reps(int n);

/// Builds V_rho as an exact Casimir-spectral block of an iterated tensor
/// product of a base module (trivial or spinor class) with copies of C^n.
/// `budget` bounds every intermediate ambient dimension. Throws
/// BudgetExceeded / AmbientMissing / EigenvalueCollision.
RepRealization build_rep(const DominantWeight& rho, std::size_t budget = 4096);

}  // namespace weitz
