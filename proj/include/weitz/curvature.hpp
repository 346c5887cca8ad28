#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weitz/enveloping.hpp"
#include "weitz/reps.hpp"

namespace weitz {

/// Rank-4 tensor with the symmetries and first Bianchi identity of a
/// Riemannian curvature; no underlying manifold. Entries are exact.
struct AlgebraicCurvature {
  int n = 0;
  std::vector<Rational> entries;  // n^4, row-major (i,j,k,l)

  static AlgebraicCurvature zero(int n);

  /// Constant-curvature tensor c (delta_il delta_jk - delta_ik delta_jl);
  /// scalar curvature n(n-1)c.
  static AlgebraicCurvature sphere(int n, const Rational& c);

  /// Seeded random tensor, projected exactly onto the curvature symmetries
  /// and the Bianchi kernel.
  static AlgebraicCurvature random(int n, std::uint64_t seed);

  const Rational& at(int i, int j, int k, int l) const {
    return entries[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }
  Rational& at(int i, int j, int k, int l) {
    return entries[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  }

  /// Pair symmetries and the first Bianchi identity; throws
  /// SymmetryViolation / BianchiViolation.
  void validate() const;

  QMatrix ricci() const;     // R_ij = sum_k R_ikkj
  Rational scalar() const;   // kappa = sum_i Ric_ii

  AlgebraicCurvature& operator+=(const AlgebraicCurvature& o);
  AlgebraicCurvature& operator-=(const AlgebraicCurvature& o);
  friend AlgebraicCurvature operator+(AlgebraicCurvature a, const AlgebraicCurvature& b) {
    return a += b;
  }
  friend AlgebraicCurvature operator-(AlgebraicCurvature a, const AlgebraicCurvature& b) {
    return a -= b;
  }
  friend bool operator==(const AlgebraicCurvature& a, const AlgebraicCurvature& b) {
    return a.n == b.n && a.entries == b.entries;
  }
};

/// Exact splitting R = W + K + S into the conformal Weyl part, the
/// Einstein-tensor part, and the scalar part.
struct CurvatureDecomposition {
  AlgebraicCurvature W, K, S;
  QMatrix E;       // Einstein tensor, symmetric traceless
  Rational kappa;  // scalar curvature
};

CurvatureDecomposition decompose_curvature(const AlgebraicCurvature& R);

/// Builds the K-part tensor of a symmetric traceless E:
///   K_ijkl = E_ik d_jl + E_jl d_ik - E_il d_jk - E_jk d_il.
AlgebraicCurvature einstein_part_tensor(const QMatrix& E);

/// Curvature action on a module: R_rho(e_i, e_j) = (1/2) sum_kl R_ijkl
/// pi(e_kl), exact over the Gaussian rationals.
GMatrix curvature_action(const AlgebraicCurvature& R, const RepRealization& rep, int i, int j);

/// All actions for i < j (the rest follow by antisymmetry).
std::vector<GMatrix> curvature_actions(const AlgebraicCurvature& R, const RepRealization& rep);

/// R^q_rho = sum_ij pi(e^q_ij) R_rho(e_i, e_j); self-adjoint for every
/// Bianchi-symmetric input.
GMatrix curvature_endomorphism_q(const AlgebraicCurvature& R, const EnvelopingPowers& powers,
                                 int q);
GMatrix curvature_endomorphism_q(const std::vector<GMatrix>& actions,
                                 const EnvelopingPowers& powers, int q);

/// Translated version built from the hat table.
GMatrix curvature_endomorphism_q_hat(const AlgebraicCurvature& R, const EnvelopingPowers& powers,
                                     int q);
GMatrix curvature_endomorphism_q_hat(const std::vector<GMatrix>& actions,
                                     const EnvelopingPowers& powers, int q);

/// R^pf_rho = sum_ij pi(pf_ij) R_rho(e_i, e_j); n even, n <= 8.
GMatrix curvature_endomorphism_pf(const AlgebraicCurvature& R, const RepRealization& rep);
GMatrix curvature_endomorphism_pf(const std::vector<GMatrix>& actions, const RepRealization& rep,
                                  const PfElements& pf);

/// Four-dimensional block data of the curvature operator on 2-forms in the
/// self-dual / anti-self-dual basis X_i^±.
struct FourDimSplit {
  QMatrix Wplus, Wminus;  // symmetric traceless 3x3
  QMatrix K;              // 3x3 block coupling the two halves
  Rational kappa;
};

FourDimSplit four_dim_split(const AlgebraicCurvature& R);

/// Inverse of four_dim_split: the unique algebraic curvature tensor with
/// the given blocks.
AlgebraicCurvature four_dim_assemble(const FourDimSplit& split);

/// The coefficient matrices of the basis X_1^±, X_2^±, X_3^± as elements
/// sum a_ij e_ij (antisymmetric 4x4, entries for i < j).
std::vector<QMatrix> self_dual_basis(bool plus);

/// R^±_rho = 4 sum_i pi(X_i^± ) pi(R_T(X_i^±)) on an so(4)-module.
std::pair<GMatrix, GMatrix> four_dim_endomorphisms(const AlgebraicCurvature& R,
                                                   const RepRealization& rep);

}  // namespace weitz
