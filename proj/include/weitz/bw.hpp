#pragma once

#include <string>
#include <vector>

#include "weitz/branching.hpp"
#include "weitz/matrix.hpp"

namespace weitz {

/// What the right-hand side of a coefficient identity denotes. Operators are
/// symbolic labels here; a formula is a statement about coefficient vectors.
enum class RhsKind {
  Laplacian,        // nabla* nabla
  RHat,             // translated curvature endomorphism R^_rho^q (q >= 1)
  R1Gauduchon,      // plain R^1_rho
  RPf,              // Pfaffian curvature endomorphism
  ExceptionalWeyl,  // sum W_ijkl pi_rho(pf_ij e_kl)
};

struct CurvatureTermDescriptor {
  RhsKind kind = RhsKind::Laplacian;
  int q = 0;             // meaningful for RHat only
  Rational scale = Rational(1);

  std::string str() const;
};

/// One coefficient identity sum_i b_i (D_i)* D_i = scale * rhs, with b
/// indexed by the lexicographically ordered summands of decompose(rho).
struct BWFormula {
  DominantWeight rho;
  std::vector<Rational> coefficients;
  CurvatureTermDescriptor rhs;
  bool dependent = false;
};

/// The all-ones row: sum (D_i)* D_i = nabla* nabla.
BWFormula laplacian_formula(const DominantWeight& rho);

/// The even family, q >= 1:
///   b_lambda = sum_{p=0}^{2q-1} c^_{2q-1-p} (-w^_lambda)^p,  rhs R^^{2q}.
BWFormula even_family(const DominantWeight& rho, int q);

/// The dependent odd family, q >= 0. For q = 0 the row is returned in its
/// classical normal form b_lambda = w(rho;lambda) against -R^1/2; for q >= 1
/// b_lambda = -(2 w^^{2q+1} + w^^{2q} - sum_{p=0}^{2q} c^_{2q-p} (-w^)^p)
/// against R^^{2q+1}.
BWFormula odd_family(const DominantWeight& rho, int q);

/// n even: b_lambda = 2(pf(rho) - pf(lambda)), rhs R^pf.
BWFormula pf_formula(const DominantWeight& rho);

/// Exceptional case only: +1 on lambda_+, -1 on lambda_-, rhs the Weyl-only
/// contraction scaled by -1/(4 pf(lambda_+)).
BWFormula exceptional_formula(const DominantWeight& rho);

/// The independent family and its exact rank certificate.
struct RankCertificate {
  std::vector<BWFormula> formulas;  // the independent family
  int rank = 0;                     // exact rank of the stacked family
  int even_rank = 0;                // rank of the even rows q = 1..floor(N/2) alone
  QMatrix c_factor;                 // C(floor(N/2))
  QMatrix w_factor;                 // W(floor(N/2))
};

/// Emits even rows q = 1..floor(N/2); in the exceptional case the last even
/// row is replaced by the exceptional formula (the even rows alone stop at
/// rank floor(N/2)-1 there). Asserts rank == floor(N/2), and that the rank
/// of the stacked rows agrees with the rank of the C*W factorization.
/// Throws RankDeficit when the certificate fails.
RankCertificate independent_family(const DominantWeight& rho);

/// True iff the coefficient vector of `row` lies in the span of the
/// Laplacian row, the even rows q = 1..floor(N/2), and (n even) the pf row.
bool in_generated_span(const DominantWeight& rho, const std::vector<Rational>& row);

}  // namespace weitz
