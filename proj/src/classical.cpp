#include "weitz/classical.hpp"

#include <algorithm>

#include "weitz/casimir.hpp"

namespace weitz {

ClassicalTarget parse_classical_target(const std::string& name) {
  if (name == "spinor") return ClassicalTarget::Spinor;
  if (name == "forms") return ClassicalTarget::Forms;
  if (name == "pf-family" || name == "pf_family") return ClassicalTarget::PfFamily;
  if (name == "weyl" || name == "weyl-tensor") return ClassicalTarget::WeylTensor;
  if (name == "fourdim") return ClassicalTarget::FourDim;
  if (name == "exceptional") return ClassicalTarget::Exceptional;
  fail(ErrorKind::UnknownTarget, "unknown classical target '" + name + "'");
}

std::string classical_target_name(ClassicalTarget t) {
  switch (t) {
    case ClassicalTarget::Spinor: return "spinor";
    case ClassicalTarget::Forms: return "forms";
    case ClassicalTarget::PfFamily: return "pf-family";
    case ClassicalTarget::WeylTensor: return "weyl";
    case ClassicalTarget::FourDim: return "fourdim";
    case ClassicalTarget::Exceptional: return "exceptional";
  }
  fail(ErrorKind::UnknownTarget, "bad classical target");
}

namespace {

std::vector<Rational> full_row(const std::vector<std::pair<BWFormula, Rational>>& combination,
                               const Rational& shift) {
  std::size_t n_cols = combination.front().first.coefficients.size();
  std::vector<Rational> row(n_cols, shift);
  for (const auto& [formula, scale] : combination)
    for (std::size_t i = 0; i < n_cols; ++i) row[i] += scale * formula.coefficients[i];
  return row;
}

// Collapses a decomposition-indexed row onto table columns; merged columns
// must carry one common value.
std::vector<Rational> project_columns(const std::vector<Rational>& row,
                                      const std::vector<std::vector<int>>& columns) {
  std::vector<Rational> out;
  out.reserve(columns.size());
  for (const std::vector<int>& col : columns) {
    const Rational& v = row[static_cast<std::size_t>(col.front())];
    for (int i : col)
      if (row[static_cast<std::size_t>(i)] != v)
        fail(ErrorKind::WeightMismatch, "merged column entries disagree");
    out.push_back(v);
  }
  return out;
}

ClassicalIdentity make_identity(std::string label, const std::vector<std::vector<int>>& columns,
                                std::vector<std::pair<BWFormula, Rational>> combination,
                                Rational shift, std::string rhs) {
  std::vector<Rational> lhs = project_columns(full_row(combination, shift), columns);
  return ClassicalIdentity{std::move(label), std::move(combination), std::move(shift),
                           std::move(lhs), std::move(rhs)};
}

ClassicalIdentity single_row(std::string label, const std::vector<std::vector<int>>& columns,
                             BWFormula base, Rational scale, Rational shift, std::string rhs) {
  std::vector<std::pair<BWFormula, Rational>> comb;
  comb.emplace_back(std::move(base), std::move(scale));
  return make_identity(std::move(label), columns, std::move(comb), std::move(shift),
                       std::move(rhs));
}

std::vector<std::vector<int>> one_column_per_summand(int count) {
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < count; ++i) cols.push_back({i});
  return cols;
}

DominantWeight spinor_weight(int n) {
  WeightContext ctx = WeightContext::of(n);
  std::vector<Rational> e(static_cast<std::size_t>(ctx.m), rat(1, 2));
  return DominantWeight::validate(std::move(e), n);
}

// kappa-coefficient of R^1 on a bundle where the Weyl and Einstein parts
// drop: pi(c_2)/(n(n-1)).
Rational r1_scalar_part(const DominantWeight& rho) {
  return casimir2(rho) / rat(static_cast<long>(rho.n()) * (rho.n() - 1));
}

}  // namespace

ClassicalTable classical_spinor(int n) {
  DominantWeight rho = spinor_weight(n);
  const Decomposition& dec = decompose_cached(rho);
  if (dec.count() != 2)
    fail(ErrorKind::WeightMismatch, "spinor decomposition of " + rho.str() + " is not binary");

  ClassicalTable t{ClassicalTarget::Spinor, rho, {"twistor", "dirac"},
                   one_column_per_summand(2), {}, {}, {}};
  // Operator normalizations D = sqrt(n) D_2 and T = sqrt(n/(n-1)) D_1,
  // stored as squares.
  Rational dirac_sq(n);
  Rational twistor_sq = rat(n) / rat(n - 1);
  t.operator_squares = {twistor_sq, dirac_sq};

  BWFormula gaud = odd_family(rho, 0);
  const Rational w1 = gaud.coefficients[0];
  const Rational w2 = gaud.coefficients[1];
  Rational r1_kappa = r1_scalar_part(rho);

  // D^2 = nabla*nabla + (1/4) kappa: solve n*e_2 = a*ones + b*w.
  Rational b = rat(n) / Rational(w2 - w1);
  Rational a = -b * w1;
  Rational kappa_coeff = b * rat(-1, 2) * r1_kappa;
  t.identities.push_back(single_row("lichnerowicz", t.column_summands, gaud, b, a,
                                    "nabla*nabla + (" + kappa_coeff.get_str() + ")*kappa"));

  // D^2 - T*T = friedrich * kappa: solve (-T^2, n) = a*ones + b*w.
  Rational b2 = (rat(n) + twistor_sq) / Rational(w2 - w1);
  Rational a2 = -twistor_sq - b2 * w1;
  Rational friedrich = b2 * rat(-1, 2) * r1_kappa;
  t.identities.push_back(single_row("friedrich", t.column_summands, gaud, b2, a2,
                                    "(" + friedrich.get_str() + ")*kappa"));

  t.constants["dirac_square"] = dirac_sq;
  t.constants["twistor_square"] = twistor_sq;
  t.constants["kappa_coefficient"] = kappa_coeff;
  t.constants["friedrich"] = friedrich;
  return t;
}

ClassicalTable classical_forms(int n, int p) {
  WeightContext ctx = WeightContext::of(n);
  int max_p = ctx.even ? ctx.m - 1 : ctx.m;
  if (p < 1 || p > max_p)
    fail(ErrorKind::WeightMismatch,
         "forms degree p must be in 1.." + std::to_string(max_p) + " for n=" + std::to_string(n));
  std::vector<Rational> ones(static_cast<std::size_t>(p), Rational(1));
  DominantWeight rho = DominantWeight::validate(std::move(ones), n);
  const Decomposition& dec = decompose_cached(rho);

  // Columns: conformal Killing target, the d-target (the exceptional pair
  // merges into it for p = m-1, n even), the d*-target.
  std::vector<Rational> top = rho.entries();
  top[0] += 1;
  std::vector<Rational> bottom = rho.entries();
  bottom[static_cast<std::size_t>(p - 1)] -= 1;

  int idx_c = -1, idx_dstar = -1;
  std::vector<int> idx_d;
  for (int i = 0; i < dec.count(); ++i) {
    if (dec.summand(i).lambda.entries() == top)
      idx_c = i;
    else if (dec.summand(i).lambda.entries() == bottom)
      idx_dstar = i;
    else
      idx_d.push_back(i);
  }
  if (idx_c < 0 || idx_dstar < 0 || idx_d.empty())
    fail(ErrorKind::WeightMismatch, "unexpected decomposition for forms weight " + rho.str());
  for (int i : idx_d)
    if (dec.summand(i).conformal_weight != Rational(-p))
      fail(ErrorKind::WeightMismatch, "d-target conformal weight is not -p");

  Rational d_rho(weyl_dim(rho));
  Integer dim_d(0);
  for (int i : idx_d) dim_d += dec.summand(i).dimension;

  // Squares fixed by the classical symbol norms, sum_i (e_i wedge)*(e_i
  // wedge) = (n-p) id and sum_i iota_i* iota_i = p id on p-forms, measured
  // against the branching norm sum_i p*(e_i)p(e_i) = d(lambda)/d(rho).
  Rational sq_d = rat(n - p) * d_rho / Rational(dim_d);
  Rational sq_dstar = rat(p) * d_rho / Rational(dec.summand(idx_dstar).dimension);

  ClassicalTable t{ClassicalTarget::Forms, rho,
                   {"conformal_killing", "d", "d_star"},
                   {{idx_c}, idx_d, {idx_dstar}},
                   {Rational(1), sq_d, sq_dstar},
                   {}, {}};

  t.identities.push_back(single_row("laplacian", t.column_summands, laplacian_formula(rho),
                                    Rational(1), Rational(0), "nabla*nabla"));
  t.identities.push_back(single_row("gauduchon", t.column_summands, odd_family(rho, 0),
                                    Rational(1), Rational(0), "-R^1/2"));

  t.constants["d_square"] = sq_d;
  t.constants["dstar_square"] = sq_dstar;
  t.constants["frac_d_laplacian"] = Rational(1) / sq_d;
  t.constants["frac_dstar_laplacian"] = Rational(1) / sq_dstar;
  t.constants["frac_d_gauduchon"] = rat(p) / sq_d;
  t.constants["frac_dstar_gauduchon"] = rat(n - p) / sq_dstar;

  // Gallot-Meyer: ((n-p+1)/(2(n-p))) * pi(c_2) collapses to p(n-p+1).
  t.constants["gallot_meyer"] = Rational(rat(n - p + 1, 2 * (n - p)) * casimir2(rho));
  return t;
}

PfFamilyReduction pf_family_reduction(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();
  if (!ctx.even) fail(ErrorKind::WeightMismatch, "pf family needs even n");
  Rational p = rho.entry(0);
  for (int i = 0; i + 1 < ctx.m; ++i)
    if (rho.entry(i) != p) fail(ErrorKind::WeightMismatch, "pf family weight must be (p,...,p,±p)");
  if (abs(rho.entry(ctx.m - 1)) != p || p < 1)
    fail(ErrorKind::WeightMismatch, "pf family weight must be (p,...,p,±p) with p >= 1");

  const Decomposition& dec = decompose_cached(rho);
  if (dec.count() != 2)
    fail(ErrorKind::WeightMismatch, "pf family decomposition of " + rho.str() + " is not binary");

  BWFormula gaud = odd_family(rho, 0);
  BWFormula pf_row = pf_formula(rho);
  const Rational w1 = gaud.coefficients[0];

  // R^1-row = -2 * gauduchon row; beta cancels the first column against the
  // Laplacian row.
  Rational beta = Rational(1) / (2 * w1);
  Rational d2 = 1 - gaud.coefficients[1] / w1;

  Rational kappa_coeff = beta * r1_scalar_part(rho);
  Rational weyl_coeff = beta * rat(1, 2);

  Rational pf_rho = pfaffian_eigenvalue(rho);
  Rational prop = p * (p + (ctx.m - 1));
  bool proportional = true;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational lhs = pf_rho * -2 * gaud.coefficients[i];
    Rational rhs = prop * pf_row.coefficients[i];
    if (lhs != rhs) proportional = false;
  }

  return PfFamilyReduction{rho, std::move(d2), std::move(kappa_coeff), std::move(weyl_coeff),
                           std::move(prop), proportional};
}

namespace {

ClassicalTable pf_family_table(const DominantWeight& rho) {
  PfFamilyReduction red = pf_family_reduction(rho);

  ClassicalTable t{ClassicalTarget::PfFamily, rho, {"D_1", "D_2"}, one_column_per_summand(2),
                   {Rational(1), Rational(1)}, {}, {}};
  BWFormula gaud = odd_family(rho, 0);
  t.identities.push_back(single_row("laplacian", t.column_summands, laplacian_formula(rho),
                                    Rational(1), Rational(0), "nabla*nabla"));
  t.identities.push_back(
      single_row("gauduchon", t.column_summands, gaud, Rational(1), Rational(0), "-R^1/2"));
  t.identities.push_back(single_row("pfaffian", t.column_summands, pf_formula(rho), Rational(1),
                                    Rational(0), "R^pf"));
  // The reduced identity: -1/w1 times the Gauduchon row plus the Laplacian
  // row isolates D_2.
  Rational scale = Rational(-1) / gaud.coefficients[0];
  t.identities.push_back(single_row(
      "reduction", t.column_summands, gaud, scale, Rational(1),
      "nabla*nabla + (" + red.kappa_coefficient.get_str() + ")*kappa + (" +
          red.weyl_coefficient.get_str() + ")*sum W pi(e e)"));

  t.constants["d2_coefficient"] = red.d2_coefficient;
  t.constants["kappa_coefficient"] = red.kappa_coefficient;
  t.constants["weyl_coefficient"] = red.weyl_coefficient;
  t.constants["proportionality"] = red.proportionality_constant;
  t.constants["proportional"] = red.proportional ? 1 : 0;
  return t;
}

ClassicalTable weyl_table(const DominantWeight& rho, const std::vector<DominantWeight>& mask) {
  const Decomposition& dec = decompose_cached(rho);

  std::vector<int> masked;
  for (const DominantWeight& w : mask) {
    int idx = dec.index_of(w);
    if (idx < 0) fail(ErrorKind::WeightMismatch, "mask weight " + w.str() + " is not a summand");
    masked.push_back(idx);
  }

  std::vector<int> kept;
  for (int i = 0; i < dec.count(); ++i)
    if (std::find(masked.begin(), masked.end(), i) == masked.end()) kept.push_back(i);
  if (kept.size() != 2)
    fail(ErrorKind::WeightMismatch, "Bianchi mask must leave exactly two gradients");
  int idx1 = kept[0], idx2 = kept[1];

  BWFormula gaud = odd_family(rho, 0);
  const Rational w1 = gaud.coefficients[static_cast<std::size_t>(idx1)];
  const Rational w2 = gaud.coefficients[static_cast<std::size_t>(idx2)];

  ClassicalTable t{ClassicalTarget::WeylTensor, rho, {}, one_column_per_summand(dec.count()),
                   {}, {}, {}};
  for (int i = 0; i < dec.count(); ++i) {
    bool is_masked = std::find(masked.begin(), masked.end(), i) != masked.end();
    t.operator_names.push_back(is_masked ? "bianchi_masked" : (i == idx1 ? "D_1" : "D_2"));
    t.operator_squares.push_back(Rational(1));
  }

  // ones - (1/w1)*gauduchon vanishes on D_1, reads 1 - w2/w1 = (n+1)/2 on
  // D_2, and has rhs nabla*nabla + (1/(2 w1)) R^1. The masked columns carry
  // nonzero entries; the second Bianchi identity kills those gradients on
  // sections of the Weyl bundle.
  Rational scale = Rational(-1) / w1;
  Rational r1_coeff = Rational(1) / (2 * w1);
  t.identities.push_back(single_row("weyl_bochner", t.column_summands, gaud, scale, Rational(1),
                                    "nabla*nabla + (" + r1_coeff.get_str() + ")*R^1"));

  t.constants["d2_coefficient"] = Rational(1 - w2 / w1);
  t.constants["r1_coefficient"] = r1_coeff;
  return t;
}

}  // namespace

ClassicalTable classical_pf_family(int n, const Rational& p) {
  WeightContext ctx = WeightContext::of(n);
  if (!ctx.even) fail(ErrorKind::WeightMismatch, "pf family needs even n");
  std::vector<Rational> e(static_cast<std::size_t>(ctx.m), p);
  return pf_family_table(DominantWeight::validate(std::move(e), n));
}

ClassicalTable classical_weyl(int n) {
  if (n < 5) fail(ErrorKind::WeightMismatch, "Weyl tensor table needs n >= 5");
  DominantWeight rho = DominantWeight::validate({Rational(2), Rational(2)}, n);
  const Decomposition& dec = decompose_cached(rho);

  // The standard second-Bianchi mask: (2,2,±1) where dominant, and rho
  // itself when it occurs (n = 5).
  std::vector<DominantWeight> mask;
  for (int i = 0; i < dec.count(); ++i) {
    const DominantWeight& l = dec.summand(i).lambda;
    if (l == rho) mask.push_back(l);
    if (l.m() >= 3 && abs(l.entry(2)) == 1 && l.entry(0) == 2 && l.entry(1) == 2)
      mask.push_back(l);
  }
  return weyl_table(rho, mask);
}

ClassicalTable classical_fourdim(int k, int l) {
  if (k < 1 || l < 1) fail(ErrorKind::WeightMismatch, "fourdim labels must be positive");
  DominantWeight rho = DominantWeight::validate({rat(k + l, 2), rat(k - l, 2)}, 4);
  const Decomposition& dec = decompose_cached(rho);
  if (dec.count() != 4)
    fail(ErrorKind::WeightMismatch,
         "fourdim table needs all four gradients; got N=" + std::to_string(dec.count()));

  // Columns in the classical order rho+mu_1, rho+mu_2, rho-mu_2, rho-mu_1
  // (lexicographic), which differs from the conformal-weight order when
  // rho^2 < 0.
  auto shifted = [&](int i, int sign) {
    std::vector<Rational> e = rho.entries();
    e[static_cast<std::size_t>(i)] += sign;
    return dec.index_of(DominantWeight::validate(std::move(e), 4));
  };
  std::vector<std::vector<int>> columns = {
      {shifted(0, +1)}, {shifted(1, +1)}, {shifted(1, -1)}, {shifted(0, -1)}};
  for (const std::vector<int>& c : columns)
    if (c.front() < 0) fail(ErrorKind::WeightMismatch, "missing fourdim summand");

  BWFormula gaud = odd_family(rho, 0);
  BWFormula pf_row = pf_formula(rho);

  ClassicalTable t{ClassicalTarget::FourDim, rho, {"D_1", "D_2", "D_3", "D_4"}, columns,
                   std::vector<Rational>(4, Rational(1)), {}, {}};
  t.identities.push_back(single_row("laplacian", columns, laplacian_formula(rho), Rational(1),
                                    Rational(0), "nabla*nabla"));

  // R^1 = R^+ + R^- and R^pf = R^+ - R^- solved for the halves: the -R^+
  // row is G - P/2 and the -R^- row is G + P/2, with G the Gauduchon row
  // (so that -2G is the R^1 row) and P the pf row.
  t.identities.push_back(make_identity("self_dual", columns,
                                       {{gaud, Rational(1)}, {pf_row, rat(-1, 2)}}, Rational(0),
                                       "-R^+"));
  t.identities.push_back(make_identity("anti_self_dual", columns,
                                       {{gaud, Rational(1)}, {pf_row, rat(1, 2)}}, Rational(0),
                                       "-R^-"));

  t.constants["k"] = k;
  t.constants["l"] = l;
  t.constants["scalar_plus"] = rat(static_cast<long>(k) * (k + 2), 12);
  t.constants["scalar_minus"] = rat(static_cast<long>(l) * (l + 2), 12);
  return t;
}

ClassicalTable classical_exceptional(const DominantWeight& rho) {
  BWFormula row = exceptional_formula(rho);
  const Decomposition& dec = decompose_cached(rho);
  ClassicalTable t{ClassicalTarget::Exceptional, rho, {}, one_column_per_summand(dec.count()),
                   {}, {}, {}};
  for (int i = 0; i < dec.count(); ++i) {
    t.operator_names.push_back("D_" + std::to_string(i + 1));
    t.operator_squares.push_back(Rational(1));
  }
  Rational pf_plus = *dec.summand(dec.exceptional_pair->first).pf_eigenvalue;
  Rational scale = row.rhs.scale;
  t.identities.push_back(single_row("exceptional", t.column_summands, std::move(row), Rational(1),
                                    Rational(0),
                                    "(" + scale.get_str() + ")*sum W pi(pf_ij e_kl)"));
  t.constants["pf_plus"] = pf_plus;
  t.constants["rhs_scale"] = scale;
  return t;
}

ClassicalTable normalize_against(const DominantWeight& rho, ClassicalTarget target,
                                 const ClassicalParams& params) {
  switch (target) {
    case ClassicalTarget::Spinor: {
      ClassicalTable t = classical_spinor(rho.n());
      if (t.rho != rho) fail(ErrorKind::WeightMismatch, rho.str() + " is not the spinor weight");
      return t;
    }
    case ClassicalTarget::Forms: {
      ClassicalTable t = classical_forms(rho.n(), params.p);
      if (t.rho != rho) fail(ErrorKind::WeightMismatch, rho.str() + " is not the forms weight");
      return t;
    }
    case ClassicalTarget::PfFamily:
      return pf_family_table(rho);
    case ClassicalTarget::WeylTensor: {
      if (!params.mask.empty()) {
        DominantWeight check = DominantWeight::validate({Rational(2), Rational(2)}, rho.n());
        if (rho != check) fail(ErrorKind::WeightMismatch, rho.str() + " is not the Weyl weight");
        return weyl_table(rho, params.mask);
      }
      ClassicalTable t = classical_weyl(rho.n());
      if (t.rho != rho) fail(ErrorKind::WeightMismatch, rho.str() + " is not the Weyl weight");
      return t;
    }
    case ClassicalTarget::FourDim: {
      if (rho.n() != 4) fail(ErrorKind::WeightMismatch, "fourdim table needs n = 4");
      Rational k = rho.entry(0) + rho.entry(1);
      Rational l = rho.entry(0) - rho.entry(1);
      if (!is_integer(k) || !is_integer(l))
        fail(ErrorKind::WeightMismatch, "fourdim labels are not integers");
      return classical_fourdim(static_cast<int>(to_long(k)), static_cast<int>(to_long(l)));
    }
    case ClassicalTarget::Exceptional:
      return classical_exceptional(rho);
  }
  fail(ErrorKind::UnknownTarget, "bad classical target");
}

}  // namespace weitz
