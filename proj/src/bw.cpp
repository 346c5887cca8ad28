#include "weitz/bw.hpp"

#include "weitz/casimir.hpp"
#include "weitz/linalg.hpp"

namespace weitz {

std::string CurvatureTermDescriptor::str() const {
  std::string base;
  switch (kind) {
    case RhsKind::Laplacian: base = "laplacian"; break;
    case RhsKind::RHat: base = "R_hat_" + std::to_string(q); break;
    case RhsKind::R1Gauduchon: base = "R_1"; break;
    case RhsKind::RPf: base = "R_pf"; break;
    case RhsKind::ExceptionalWeyl: base = "weyl_pf_contraction"; break;
  }
  if (scale != Rational(1)) base = scale.get_str() + "*" + base;
  return base;
}

BWFormula laplacian_formula(const DominantWeight& rho) {
  const Decomposition& dec = decompose_cached(rho);
  return BWFormula{rho, std::vector<Rational>(dec.summands.size(), Rational(1)),
                   {RhsKind::Laplacian, 0, Rational(1)}, false};
}

BWFormula even_family(const DominantWeight& rho, int q) {
  if (q < 1) fail(ErrorKind::IndexOutOfRange, "even family needs q >= 1");
  const Decomposition& dec = decompose_cached(rho);
  std::vector<Rational> hats;
  for (int p = 0; p <= 2 * q - 1; ++p) hats.push_back(casimir_hat_q(rho, p));

  std::vector<Rational> coeff;
  coeff.reserve(dec.summands.size());
  for (const Summand& s : dec.summands) {
    Rational b(0);
    for (int p = 0; p <= 2 * q - 1; ++p) {
      Rational term = hats[static_cast<std::size_t>(2 * q - 1 - p)] *
                      pow_rational(-s.translated_weight, static_cast<unsigned>(p));
      b += term;
    }
    coeff.push_back(std::move(b));
  }
  return BWFormula{rho, std::move(coeff), {RhsKind::RHat, 2 * q, Rational(1)}, false};
}

BWFormula odd_family(const DominantWeight& rho, int q) {
  if (q < 0) fail(ErrorKind::IndexOutOfRange, "odd family needs q >= 0");
  const Decomposition& dec = decompose_cached(rho);

  if (q == 0) {
    // R^0 vanishes, so R^^1 = R^1 and the raw row (-2w per summand) divides
    // to the classical form: sum w (D)*D = -R^1/2.
    std::vector<Rational> coeff;
    for (const Summand& s : dec.summands) coeff.push_back(s.conformal_weight);
    return BWFormula{rho, std::move(coeff), {RhsKind::R1Gauduchon, 0, rat(-1, 2)}, true};
  }

  std::vector<Rational> hats;
  for (int p = 0; p <= 2 * q; ++p) hats.push_back(casimir_hat_q(rho, p));
  std::vector<Rational> coeff;
  for (const Summand& s : dec.summands) {
    Rational b = 2 * pow_rational(s.translated_weight, static_cast<unsigned>(2 * q + 1));
    b += pow_rational(s.translated_weight, static_cast<unsigned>(2 * q));
    for (int p = 0; p <= 2 * q; ++p) {
      Rational term = hats[static_cast<std::size_t>(2 * q - p)] *
                      pow_rational(-s.translated_weight, static_cast<unsigned>(p));
      b -= term;
    }
    coeff.push_back(Rational(-b));
  }
  return BWFormula{rho, std::move(coeff), {RhsKind::RHat, 2 * q + 1, Rational(1)}, true};
}

BWFormula pf_formula(const DominantWeight& rho) {
  if (!rho.context().even) fail(ErrorKind::OddDimension, "pf formula needs even n");
  const Decomposition& dec = decompose_cached(rho);
  Rational pf_rho = pfaffian_eigenvalue(rho);
  std::vector<Rational> coeff;
  for (const Summand& s : dec.summands) {
    Rational b = 2 * (pf_rho - *s.pf_eigenvalue);
    coeff.push_back(std::move(b));
  }
  return BWFormula{rho, std::move(coeff), {RhsKind::RPf, 0, Rational(1)}, false};
}

BWFormula exceptional_formula(const DominantWeight& rho) {
  const Decomposition& dec = decompose_cached(rho);
  if (!dec.exceptional)
    fail(ErrorKind::NotExceptional, rho.str() + " is not an exceptional decomposition");
  std::vector<Rational> coeff(dec.summands.size(), Rational(0));
  int plus = dec.exceptional_pair->first, minus = dec.exceptional_pair->second;
  coeff[static_cast<std::size_t>(plus)] = 1;
  coeff[static_cast<std::size_t>(minus)] = -1;
  Rational pf_plus = *dec.summand(plus).pf_eigenvalue;
  Rational scale = rat(-1, 4) / pf_plus;
  return BWFormula{rho, std::move(coeff), {RhsKind::ExceptionalWeyl, 0, std::move(scale)}, false};
}

namespace {

QMatrix stack_rows(const std::vector<const BWFormula*>& rows, std::size_t n_cols) {
  QMatrix m(rows.size(), n_cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n_cols; ++j) m(i, j) = rows[i]->coefficients[j];
  return m;
}

}  // namespace

RankCertificate independent_family(const DominantWeight& rho) {
  const Decomposition& dec = decompose_cached(rho);
  int n_summands = dec.count();
  int target = n_summands / 2;

  std::vector<BWFormula> even_rows;
  for (int q = 1; q <= target; ++q) even_rows.push_back(even_family(rho, q));

  RankCertificate cert;
  // C(K) and W(K): the factorization of the stacked even rows.
  cert.c_factor = QMatrix(static_cast<std::size_t>(target), static_cast<std::size_t>(2 * target));
  for (int r = 1; r <= target; ++r)
    for (int c = 1; c <= 2 * r; ++c) {
      Rational v = casimir_hat_q(rho, 2 * r - c);
      cert.c_factor(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) =
          (c % 2 == 1) ? v : Rational(-v);
    }
  cert.w_factor = QMatrix(static_cast<std::size_t>(2 * target), static_cast<std::size_t>(n_summands));
  for (int p = 0; p < 2 * target; ++p)
    for (int j = 0; j < n_summands; ++j)
      cert.w_factor(static_cast<std::size_t>(p), static_cast<std::size_t>(j)) =
          pow_rational(dec.summand(j).translated_weight, static_cast<unsigned>(p));

  {
    std::vector<const BWFormula*> ptrs;
    for (const BWFormula& f : even_rows) ptrs.push_back(&f);
    QMatrix stacked = stack_rows(ptrs, static_cast<std::size_t>(n_summands));
    cert.even_rank = static_cast<int>(rank(stacked));
    if (target > 0) {
      QMatrix product = cert.c_factor * cert.w_factor;
      if (static_cast<int>(rank(product)) != cert.even_rank || product != stacked)
        fail(ErrorKind::RankDeficit, "C*W factorization disagrees with the even rows");
    }
  }

  if (dec.exceptional) {
    even_rows.pop_back();
    even_rows.push_back(exceptional_formula(rho));
  }
  cert.formulas = std::move(even_rows);

  std::vector<const BWFormula*> ptrs;
  for (const BWFormula& f : cert.formulas) ptrs.push_back(&f);
  cert.rank = static_cast<int>(rank(stack_rows(ptrs, static_cast<std::size_t>(n_summands))));

  int expected_even = dec.exceptional ? target - 1 : target;
  if (cert.even_rank != expected_even)
    fail(ErrorKind::RankDeficit, "even-family rank " + std::to_string(cert.even_rank) +
                                     " for " + rho.str() + ", expected " +
                                     std::to_string(expected_even));
  if (cert.rank != target)
    fail(ErrorKind::RankDeficit, "independent family rank " + std::to_string(cert.rank) +
                                     " for " + rho.str() + ", expected " + std::to_string(target));
  return cert;
}

bool in_generated_span(const DominantWeight& rho, const std::vector<Rational>& row) {
  const Decomposition& dec = decompose_cached(rho);
  std::vector<BWFormula> gens;
  gens.push_back(laplacian_formula(rho));
  for (int q = 1; q <= dec.count() / 2; ++q) gens.push_back(even_family(rho, q));
  if (rho.context().even) gens.push_back(pf_formula(rho));

  QMatrix m(gens.size(), static_cast<std::size_t>(dec.count()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < dec.count(); ++j)
      m(i, static_cast<std::size_t>(j)) = gens[i].coefficients[static_cast<std::size_t>(j)];
  return in_row_span(m, row);
}

}  // namespace weitz
