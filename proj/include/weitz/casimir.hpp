#pragma once

#include <map>
#include <optional>
#include <utility>

#include "weitz/weights.hpp"

namespace weitz {

/// Conformal weight of the pair (rho, lambda):
///   w = 1/2 (<d+lambda, d+lambda> - <d+rho, d+rho> - n + 1),  d = half_sum.
/// Defined for any two weights of the same context; no summand check.
Rational conformal_weight_pair(const DominantWeight& rho, const DominantWeight& lambda);

/// Conformal weight with the summand precondition enforced (NotASummand).
Rational conformal_weight(const DominantWeight& rho, const DominantWeight& lambda);

/// Eigenvalue of the quadratic Casimir: 2<rho,rho> + 4<rho,delta>.
Rational casimir2(const DominantWeight& rho);

/// Eigenvalue of c_q through the branching sum
///   pi(c_q) = (1/d(rho)) sum_lambda w(rho;lambda)^q d(lambda).
Rational casimir_q(const DominantWeight& rho, int q);

/// Eigenvalue of the translated Casimir via the same sum with w replaced by
/// w + (n-1)/2.
Rational casimir_hat_q(const DominantWeight& rho, int q);

/// Eigenvalue of the degree-m Pfaffian element, n = 2m only:
///   (rho^1 + m - 1)(rho^2 + m - 2) ... (rho^{m-1} + 1) rho^m.
Rational pfaffian_eigenvalue(const DominantWeight& rho);

/// Checks 2 c^_{2q+1} = -c^_{2q} + sum_{p=0}^{2q} (-1)^p c^_{2q-p} c^_p
/// exactly on the eigenvalues for rho.
bool verify_c_identity(const DominantWeight& rho, int q);

/// Checks, for n even, the eigenvalue relations tying the Pfaffian to the
/// decomposition: the branching sums for 2m pi(pf) (both the plain and the
/// w-weighted form) and the per-summand relation
///   (w + m - 1) pi_lambda(pf) = (w + m) pi_rho(pf).
bool verify_pf_relations(const DominantWeight& rho);

/// Eigenvalue tables for q = 0..q_max.
struct CasimirTable {
  DominantWeight rho;
  std::map<int, Rational> c;
  std::map<int, Rational> c_hat;
  std::optional<Rational> pf;
};

CasimirTable casimir_table(const DominantWeight& rho, int q_max = 8);

/// The scalars a^_{q,p} tying transposed generator powers together, evaluated
/// on V_rho. Grown by the recursion
///   a^_{q+1,p} = { -a^_{q,q} (p=q+1); -a^_{q,q-1}-1 (p=q); -a^_{q,p-1}
///                  (1<=p<=q-1); c^_q (p=0) }
/// from (a^_00, a^_10, a^_11) = (1, n-1, -1).
struct RecursionCoefficients {
  std::map<std::pair<int, int>, Rational> table;

  const Rational& at(int q, int p) const { return table.at({q, p}); }
};

RecursionCoefficients recursion_coefficients(const DominantWeight& rho, int q_max);

/// Closed-form value of a^_{q,p} for cross-checking the recursion.
Rational recursion_coefficient_closed_form(const DominantWeight& rho, int q, int p);

}  // namespace weitz
