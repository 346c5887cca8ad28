#pragma once

#include <map>
#include <vector>

#include "weitz/reps.hpp"

namespace weitz {

/// Tables of the contracted generator powers
///   e^q_ij = sum e_{i i_1} e_{i_1 i_2} ... e_{i_{q-1} j}
/// and their translated versions e^_ij = e_ij + ((n-1)/2) delta_ij,
/// evaluated in a fixed realization. Built level by level through the
/// product law sum_k e^p_ik e^q_kj = e^{p+q}_ij.
class EnvelopingPowers {
public:
  explicit EnvelopingPowers(const RepRealization& rep, int q_max);

  const RepRealization& rep() const { return *rep_; }
  int q_max() const { return q_max_; }

  const GMatrix& e_power(int i, int j, int q) const;
  const GMatrix& e_hat_power(int i, int j, int q) const;

  /// Scalar of sum_i e^q_ii; throws if the matrix is not a real scalar.
  Rational casimir_matrix_eigenvalue(int q) const;
  /// Scalar of sum_i e^^q_ii.
  Rational casimir_hat_matrix_eigenvalue(int q) const;

private:
  const RepRealization* rep_;
  int q_max_;
  // level q -> flat n*n table
  std::vector<std::vector<GMatrix>> plain_, hat_;
};

/// The Pfaffian element and its relatives pf_ij, evaluated in a realization
/// (n even, n <= 8). The permutation sum is canonicalized to perfect
/// matchings: disjoint e_{ab} commute, so each matching stands for its
/// 2^m m! (resp. 2^{m-1}(m-1)!) signed rearrangements.
struct PfElements {
  GMatrix pf;
  std::vector<GMatrix> upper;  // pf_ij for i < j, flat n*n
  int n = 0;

  /// pf_ij for any i, j: pf_ii = pf, pf_ji = -pf_ij.
  GMatrix at(int i, int j) const;
};

/// Computes the Pfaffian family from any generator table (i < j, 0-based
/// flat n*n indexing), so it applies to irreducible realizations and to
/// tensor-product actions alike.
PfElements pfaffian_elements(int n, std::size_t dim, const std::vector<GMatrix>& upper);

PfElements pfaffian_elements(const RepRealization& rep);

}  // namespace weitz
