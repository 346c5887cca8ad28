#include "weitz/casimir.hpp"

#include "weitz/branching.hpp"

namespace weitz {

Rational conformal_weight_pair(const DominantWeight& rho, const DominantWeight& lambda) {
  if (rho.context() != lambda.context())
    fail(ErrorKind::RankMismatch, "conformal weight across different contexts");
  std::vector<Rational> delta = half_sum(rho.n());
  std::vector<Rational> dl(delta.size()), dr(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    dl[i] = delta[i] + lambda.entries()[i];
    dr[i] = delta[i] + rho.entries()[i];
  }
  Rational w = inner(dl, dl) - inner(dr, dr) - (rho.n() - 1);
  w /= 2;
  return w;
}

Rational conformal_weight(const DominantWeight& rho, const DominantWeight& lambda) {
  if (decompose_cached(rho).index_of(lambda) < 0)
    fail(ErrorKind::NotASummand,
         lambda.str() + " is not a summand of " + rho.str() + " tensor C^n");
  return conformal_weight_pair(rho, lambda);
}

Rational casimir2(const DominantWeight& rho) {
  Rational r = 2 * inner(rho.entries(), rho.entries());
  r += 4 * inner(rho.entries(), half_sum(rho.n()));
  return r;
}

Rational casimir_q(const DominantWeight& rho, int q) {
  if (q < 0) fail(ErrorKind::IndexOutOfRange, "casimir_q needs q >= 0");
  const Decomposition& dec = decompose_cached(rho);
  Rational sum(0);
  for (const Summand& s : dec.summands)
    sum += pow_rational(s.conformal_weight, static_cast<unsigned>(q)) * Rational(s.dimension);
  sum /= Rational(weyl_dim(rho));
  return sum;
}

Rational casimir_hat_q(const DominantWeight& rho, int q) {
  if (q < 0) fail(ErrorKind::IndexOutOfRange, "casimir_hat_q needs q >= 0");
  const Decomposition& dec = decompose_cached(rho);
  Rational sum(0);
  for (const Summand& s : dec.summands)
    sum += pow_rational(s.translated_weight, static_cast<unsigned>(q)) * Rational(s.dimension);
  sum /= Rational(weyl_dim(rho));
  return sum;
}

Rational pfaffian_eigenvalue(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();
  if (!ctx.even) fail(ErrorKind::OddDimension, "Pfaffian eigenvalue needs even n");
  Rational product(1);
  for (int i = 0; i < ctx.m; ++i) product *= rho.entry(i) + (ctx.m - 1 - i);
  return product;
}

bool verify_c_identity(const DominantWeight& rho, int q) {
  Rational lhs = 2 * casimir_hat_q(rho, 2 * q + 1);
  Rational rhs = -casimir_hat_q(rho, 2 * q);
  for (int p = 0; p <= 2 * q; ++p) {
    Rational term = casimir_hat_q(rho, 2 * q - p) * casimir_hat_q(rho, p);
    if (p % 2 == 0)
      rhs += term;
    else
      rhs -= term;
  }
  return lhs == rhs;
}

bool verify_pf_relations(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();
  if (!ctx.even) fail(ErrorKind::OddDimension, "Pfaffian relations need even n");
  const Decomposition& dec = decompose_cached(rho);
  Rational pf_rho = pfaffian_eigenvalue(rho);

  Rational plain(0), weighted(0);
  for (const Summand& s : dec.summands) {
    Rational d(s.dimension);
    plain += *s.pf_eigenvalue * d;
    weighted += *s.pf_eigenvalue * s.conformal_weight * d;

    // Per-summand: (w + m - 1) pi_lambda(pf) = (w + m) pi_rho(pf).
    Rational lhs = (s.conformal_weight + (ctx.m - 1)) * *s.pf_eigenvalue;
    Rational rhs = (s.conformal_weight + ctx.m) * pf_rho;
    if (lhs != rhs) return false;
  }
  Rational d_rho(weyl_dim(rho));
  Rational target = 2 * ctx.m * pf_rho * d_rho;
  return plain == target && weighted == target;
}

CasimirTable casimir_table(const DominantWeight& rho, int q_max) {
  CasimirTable t{rho, {}, {}, std::nullopt};
  for (int q = 0; q <= q_max; ++q) {
    t.c[q] = casimir_q(rho, q);
    t.c_hat[q] = casimir_hat_q(rho, q);
  }
  if (rho.context().even) t.pf = pfaffian_eigenvalue(rho);
  return t;
}

RecursionCoefficients recursion_coefficients(const DominantWeight& rho, int q_max) {
  RecursionCoefficients rc;
  rc.table[{0, 0}] = 1;
  if (q_max >= 1) {
    rc.table[{1, 0}] = rho.n() - 1;
    rc.table[{1, 1}] = -1;
  }
  for (int q = 1; q < q_max; ++q) {
    rc.table[{q + 1, q + 1}] = -rc.at(q, q);
    rc.table[{q + 1, q}] = -rc.at(q, q - 1) - 1;
    for (int p = 1; p <= q - 1; ++p) rc.table[{q + 1, p}] = -rc.at(q, p - 1);
    rc.table[{q + 1, 0}] = casimir_hat_q(rho, q);
  }
  return rc;
}

Rational recursion_coefficient_closed_form(const DominantWeight& rho, int q, int p) {
  if (q == 0 && p == 0) return Rational(1);
  int qm = q - 1;  // a^_{qm+1, p}
  int sign_q = (qm % 2 == 0) ? 1 : -1;
  if (p == qm + 1) return Rational(-sign_q);
  if (p == qm) {
    Rational r = sign_q * casimir_hat_q(rho, 0);
    r -= rat(1 - (-sign_q), 2);
    return r;
  }
  Rational c = casimir_hat_q(rho, qm - p);
  return (p % 2 == 0) ? c : Rational(-c);
}

}  // namespace weitz
