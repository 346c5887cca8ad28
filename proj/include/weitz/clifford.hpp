#pragma once

#include <string>
#include <vector>

#include "weitz/enveloping.hpp"
#include "weitz/reps.hpp"

namespace weitz {

/// The block maps p_lambda(e_i): V_rho -> V_lambda cut out of the projection
/// V_rho tensor C^n -> V_lambda, together with their adjoints with respect
/// to the carried inner products.
struct CliffordBlock {
  DominantWeight lambda;
  std::vector<GMatrix> maps;      // p(e_i), d(lambda) x d(rho), i = 0..n-1
  std::vector<GMatrix> adjoints;  // p*(e_i), d(rho) x d(lambda)
  GMatrix gram;                   // inner product on the target coordinates
  GMatrix embed;                  // column basis of V_lambda inside the tensor
  GMatrix coords;                 // coordinate map, coords * embed = identity

  GMatrix map_of(const std::vector<Gaussian>& xi) const;
  GMatrix adjoint_of(const std::vector<Gaussian>& xi) const;
};

/// All blocks of one decomposition, aligned with decompose(rho).summands.
struct CliffordSystem {
  DominantWeight rho;
  Decomposition decomposition;
  std::vector<CliffordBlock> blocks;

  /// sum_lambda coeff(lambda) * p*(e_i) p(e_j) for per-summand scalars.
  GMatrix weighted_sum(const std::vector<Rational>& coeff, int i, int j) const;
};

/// Splits V_rho tensor C^n with exact spectral projectors of the operator
/// 2 sum pi_rho(e_ij) tensor pi_nat(e_ji) (eigenvalue 4w per component; the
/// exceptional pair separated by the Pfaffian element of the tensor action)
/// and extracts the block maps. Throws EigenvalueCollision when two
/// non-exceptional components collide.
CliffordSystem clifford_blocks(const RepRealization& rep);

/// One named exact matrix identity check.
struct IdentityReport {
  struct Item {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;

  bool all_pass() const {
    for (const Item& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Brute-force checks of the enveloping-algebra layer on one realization:
/// realization invariants, the product law of the contracted powers, the
/// binomial translation, the transposition identity with scalar-engine
/// Casimir coefficients, its symmetrized form, and the trace match between
/// the matrix and scalar Casimir routes.
IdentityReport verify_enveloping_identities(const RepRealization& rep, int q_max);

/// Brute-force checks of the Clifford-homomorphism layer: moment identities
/// against generator powers, the eigen equation, the norm law
/// sum p*(e_i)p(e_i) = d(lambda)/d(rho), the symmetrized Clifford family,
/// equivariance, the projector formula, and (n even, n <= 8) the Pfaffian
/// identities.
IdentityReport verify_clifford_identities(const RepRealization& rep, int q_max);

/// Both layers.
IdentityReport verify_identities(const RepRealization& rep, int q_max);

}  // namespace weitz
