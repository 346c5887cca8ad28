#include "weitz/clifford.hpp"

#include <algorithm>

#include "weitz/casimir.hpp"

namespace weitz {

namespace {

std::size_t flat(int i, int j, int n) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

GMatrix scalar_matrix(std::size_t dim, const Rational& v) {
  GMatrix m = GMatrix::identity(dim);
  m *= Gaussian(v);
  return m;
}

std::vector<GMatrix> tensor_generators(const RepRealization& rep, const RepRealization& nat) {
  int n = rep.ctx.n;
  std::vector<GMatrix> upper(static_cast<std::size_t>(n) * n);
  GMatrix id_rep = GMatrix::identity(rep.dim);
  GMatrix id_nat = GMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      upper[flat(i, j, n)] = kron(rep.gen(i, j), id_nat) + kron(id_rep, nat.gen(i, j));
  return upper;
}

}  // namespace

GMatrix CliffordBlock::map_of(const std::vector<Gaussian>& xi) const {
  GMatrix acc(maps.front().rows(), maps.front().cols());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (xi[i].is_zero()) continue;
    GMatrix term = maps[i];
    term *= xi[i];
    acc += term;
  }
  return acc;
}

GMatrix CliffordBlock::adjoint_of(const std::vector<Gaussian>& xi) const {
  GMatrix acc(adjoints.front().rows(), adjoints.front().cols());
  for (std::size_t i = 0; i < adjoints.size(); ++i) {
    if (xi[i].is_zero()) continue;
    GMatrix term = adjoints[i];
    term *= conj_value(xi[i]);
    acc += term;
  }
  return acc;
}

GMatrix CliffordSystem::weighted_sum(const std::vector<Rational>& coeff, int i, int j) const {
  std::size_t d = blocks.front().adjoints.front().rows();
  GMatrix acc(d, d);
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    if (sgn(coeff[s]) == 0) continue;
    GMatrix term = blocks[s].adjoints[static_cast<std::size_t>(i)] *
                   blocks[s].maps[static_cast<std::size_t>(j)];
    term *= Gaussian(coeff[s]);
    acc += term;
  }
  return acc;
}

CliffordSystem clifford_blocks(const RepRealization& rep) {
  const WeightContext& ctx = rep.ctx;
  int n = ctx.n;
  std::size_t d = rep.dim;
  std::size_t D = d * static_cast<std::size_t>(n);

  CliffordSystem sys{rep.rho, decompose_cached(rep.rho), {}};
  const Decomposition& dec = sys.decomposition;

  RepRealization nat = natural_rep(n);

  // C = 2 sum_{ij} pi(e_ij) tensor nat(e_ji) = -4 sum_{i<j} pi(e_ij) tensor
  // nat(e_ij), a multiple of 4 w(rho;lambda) on each component.
  GMatrix c_op(D, D);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c_op += kron(rep.gen(i, j), nat.gen(i, j));
  c_op *= Gaussian(rat(-4));

  GMatrix tensor_gram;
  const GMatrix* ambient_gram = nullptr;
  if (!rep.unitary) {
    tensor_gram = kron(rep.gram, GMatrix::identity(static_cast<std::size_t>(n)));
    ambient_gram = &tensor_gram;
  }

  // Pfaffian element of the tensor action, only needed to split an
  // exceptional pair.
  std::optional<PfElements> tensor_pf;
  if (dec.exceptional)
    tensor_pf = pfaffian_elements(n, D, tensor_generators(rep, nat));

  GMatrix gram_rho_inverse;
  if (!rep.unitary) {
    auto inv = inverse(rep.gram);
    if (!inv) fail(ErrorKind::EigenvalueCollision, "singular Gram on the source module");
    gram_rho_inverse = std::move(*inv);
  }

  for (int s = 0; s < dec.count(); ++s) {
    const Summand& summand = dec.summand(s);
    Rational eigen = 4 * summand.conformal_weight;

    bool pair_member = dec.exceptional && (s == dec.exceptional_pair->first ||
                                           s == dec.exceptional_pair->second);
    std::vector<Rational> others;
    for (int t = 0; t < dec.count(); ++t) {
      if (t == s) continue;
      Rational v = 4 * dec.summand(t).conformal_weight;
      if (v == eigen) {
        bool partner = dec.exceptional && (t == dec.exceptional_pair->first ||
                                           t == dec.exceptional_pair->second);
        if (!pair_member || !partner)
          fail(ErrorKind::EigenvalueCollision,
               "non-exceptional conformal weight collision on " + rep.rho.str());
        continue;
      }
      if (std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);
    }

    GMatrix proj = GMatrix::identity(D);
    for (const Rational& v : others) {
      GMatrix factor = c_op;
      factor -= scalar_matrix(D, v);
      factor *= Gaussian(Rational(1) / Rational(eigen - v));
      proj = proj * factor;
    }
    if (pair_member) {
      Rational mine = *summand.pf_eigenvalue;
      GMatrix factor = tensor_pf->pf;
      factor -= scalar_matrix(D, Rational(-mine));
      factor *= Gaussian(Rational(1, 2) / mine);
      proj = proj * factor;
    }

    GMatrix basis = column_space_basis(proj);
    if (Integer(static_cast<unsigned long>(basis.cols())) != summand.dimension)
      fail(ErrorKind::EigenvalueCollision,
           "spectral block of " + summand.lambda.str() + " has the wrong dimension");
    GMatrix embed = orthogonalize_columns(basis, ambient_gram);
    GMatrix gram = induced_gram(embed, ambient_gram);
    auto gram_inv = inverse(gram);
    if (!gram_inv) fail(ErrorKind::EigenvalueCollision, "degenerate Gram on a Clifford block");

    // coordinate map of the orthogonal projection: G^{-1} B^* G_T
    GMatrix bt = embed.conj_transpose();
    if (ambient_gram != nullptr) bt = bt * *ambient_gram;
    GMatrix coords = *gram_inv * bt;

    CliffordBlock block{summand.lambda, {}, {}, std::move(gram), std::move(embed),
                        std::move(coords)};
    for (int i = 0; i < n; ++i) {
      // p(e_i) = coords restricted to the tensor columns c*n + i
      GMatrix p(block.embed.cols(), d);
      for (std::size_t r = 0; r < block.embed.cols(); ++r)
        for (std::size_t c = 0; c < d; ++c)
          p(r, c) = block.coords(r, c * static_cast<std::size_t>(n) + static_cast<std::size_t>(i));
      GMatrix adj = p.conj_transpose() * block.gram;
      if (!rep.unitary) adj = gram_rho_inverse * adj;
      block.maps.push_back(std::move(p));
      block.adjoints.push_back(std::move(adj));
    }
    sys.blocks.push_back(std::move(block));
  }

  // Completeness: sum_lambda p*(e_j) p(e_i) = delta_ji.
  std::vector<Rational> ones(sys.blocks.size(), Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GMatrix acc = sys.weighted_sum(ones, j, i);
      GMatrix expect = (i == j) ? GMatrix::identity(d) : GMatrix(d, d);
      if (acc != expect)
        fail(ErrorKind::EigenvalueCollision, "block completeness fails on " + rep.rho.str());
    }

  return sys;
}

namespace {

void check(IdentityReport& report, const std::string& name, bool pass,
           const std::string& detail = "") {
  report.items.push_back({name, pass, detail});
}

}  // namespace

IdentityReport verify_enveloping_identities(const RepRealization& rep, int q_max) {
  IdentityReport report;
  const WeightContext& ctx = rep.ctx;
  int n = ctx.n;
  std::size_t d = rep.dim;
  (void)ctx;

  try {
    rep.validate();
    check(report, "realization_invariants", true);
  } catch (const Error& e) {
    check(report, "realization_invariants", false, e.what());
  }

  EnvelopingPowers powers(rep, q_max);

  // product law at a balanced split (the table itself grows by one-step
  // products)
  {
    bool ok = true;
    for (int s = 2; s <= q_max && ok; ++s) {
      int p = s / 2;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          GMatrix acc(d, d);
          for (int k = 0; k < n; ++k) acc += powers.e_power(i, k, p) * powers.e_power(k, j, s - p);
          ok = (acc == powers.e_power(i, j, s));
        }
    }
    check(report, "product_law", ok);
  }

  // binomial translation between the plain and hat tables
  {
    bool ok = true;
    for (int q = 0; q <= q_max && ok; ++q)
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          GMatrix acc(d, d);
          for (int p = 0; p <= q; ++p) {
            GMatrix term = powers.e_power(i, j, p);
            term *= Gaussian(Rational(binomial(static_cast<unsigned long>(q),
                                               static_cast<unsigned long>(p))) *
                             pow_rational(rat(n - 1, 2), static_cast<unsigned>(q - p)));
            acc += term;
          }
          ok = (acc == powers.e_hat_power(i, j, q));
        }
    check(report, "hat_translation", ok);
  }

  // e^_ij = -e^_ji + (n-1) delta_ij
  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        GMatrix rhs = -powers.e_hat_power(j, i, 1);
        if (i == j) rhs += scalar_matrix(d, rat(n - 1));
        ok = (powers.e_hat_power(i, j, 1) == rhs);
      }
    check(report, "hat_antisymmetry", ok);
  }

  std::vector<Rational> c_hat;
  for (int q = 0; q <= q_max; ++q) c_hat.push_back(casimir_hat_q(rep.rho, q));

  // transposition identity: e^^q_ij against {e^^p_ji}, coefficients from
  // the scalar Casimir engine
  {
    bool ok = true;
    for (int q = 0; q <= q_max && ok; ++q)
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          GMatrix rhs = powers.e_hat_power(j, i, q);
          if (q % 2 != 0) {
            rhs *= Gaussian(rat(-1));
            rhs -= powers.e_hat_power(j, i, q - 1);
          }
          for (int p = 0; p <= q - 1; ++p) {
            GMatrix term = powers.e_hat_power(j, i, p);
            Rational coeff = c_hat[static_cast<std::size_t>(q - 1 - p)];
            if (p % 2 != 0) coeff = -coeff;
            term *= Gaussian(coeff);
            rhs += term;
          }
          ok = (powers.e_hat_power(i, j, q) == rhs);
        }
    check(report, "transposition_identity", ok);
  }

  // symmetrized combination flips by (-1)^q under transposition
  {
    bool ok = true;
    for (int q = 0; q <= q_max && ok; ++q) {
      auto symmetrized = [&](int i, int j) {
        GMatrix acc(d, d);
        if (q % 2 == 0) acc -= powers.e_hat_power(i, j, q);
        for (int p = 0; p <= q; ++p) {
          GMatrix term = powers.e_hat_power(i, j, p);
          Rational coeff = c_hat[static_cast<std::size_t>(q - p)];
          if (p % 2 != 0) coeff = -coeff;
          term *= Gaussian(coeff);
          acc += term;
        }
        return acc;
      };
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          GMatrix lhs = symmetrized(i, j);
          GMatrix rhs = symmetrized(j, i);
          if (q % 2 != 0) rhs *= Gaussian(rat(-1));
          ok = (lhs == rhs);
        }
    }
    check(report, "symmetrized_powers", ok);
  }

  // scalar engine vs matrix traces
  {
    bool ok = true;
    for (int q = 0; q <= q_max && ok; ++q)
      ok = powers.casimir_matrix_eigenvalue(q) == casimir_q(rep.rho, q) &&
           powers.casimir_hat_matrix_eigenvalue(q) == casimir_hat_q(rep.rho, q);
    check(report, "casimir_trace_match", ok);
  }

  return report;
}

IdentityReport verify_clifford_identities(const RepRealization& rep, int q_max) {
  IdentityReport report;
  const WeightContext& ctx = rep.ctx;
  int n = ctx.n;
  std::size_t d = rep.dim;

  EnvelopingPowers powers(rep, q_max);
  std::vector<Rational> c_hat;
  for (int q = 0; q <= q_max; ++q) c_hat.push_back(casimir_hat_q(rep.rho, q));

  CliffordSystem sys = clifford_blocks(rep);
  const Decomposition& dec = sys.decomposition;
  int N = dec.count();

  auto weights_pow = [&](int q, bool hat) {
    std::vector<Rational> v;
    for (const Summand& s : dec.summands)
      v.push_back(pow_rational(hat ? s.translated_weight : s.conformal_weight,
                               static_cast<unsigned>(q)));
    return v;
  };

  // moment identities: sum_l w^q p*(e_i)p(e_j) = pi(e^q_ij), plain and hat
  {
    bool ok = true;
    for (int q = 0; q <= q_max && ok; ++q) {
      std::vector<Rational> wq = weights_pow(q, false);
      std::vector<Rational> whq = weights_pow(q, true);
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = sys.weighted_sum(wq, i, j) == powers.e_power(i, j, q) &&
               sys.weighted_sum(whq, i, j) == powers.e_hat_power(i, j, q);
    }
    check(report, "moment_identities", ok);
  }

  // eigen equation: sum_i p(e_i) pi(e_ij) = w p(e_j)
  {
    bool ok = true;
    for (int s = 0; s < N && ok; ++s) {
      const CliffordBlock& block = sys.blocks[static_cast<std::size_t>(s)];
      for (int j = 0; j < n && ok; ++j) {
        GMatrix acc(block.maps.front().rows(), d);
        for (int i = 0; i < n; ++i) {
          if (i == j) continue;
          acc += block.maps[static_cast<std::size_t>(i)] * rep.pi(i, j);
        }
        GMatrix expect = block.maps[static_cast<std::size_t>(j)];
        expect *= Gaussian(dec.summand(s).conformal_weight);
        ok = (acc == expect);
      }
    }
    check(report, "eigen_equation", ok);
  }

  // norm law: sum_i p*(e_i)p(e_i) = d(lambda)/d(rho)
  {
    bool ok = true;
    for (int s = 0; s < N && ok; ++s) {
      const CliffordBlock& block = sys.blocks[static_cast<std::size_t>(s)];
      GMatrix acc(d, d);
      for (int i = 0; i < n; ++i)
        acc +=
            block.adjoints[static_cast<std::size_t>(i)] * block.maps[static_cast<std::size_t>(i)];
      Rational expect = Rational(dec.summand(s).dimension) / Rational(weyl_dim(rep.rho));
      ok = (acc == scalar_matrix(d, expect));
    }
    check(report, "norm_law", ok);
  }

  auto symmetric_sum = [&](const std::vector<Rational>& coeff, int i, int j) {
    return sys.weighted_sum(coeff, i, j) + sys.weighted_sum(coeff, j, i);
  };

  // symmetrized Clifford relations on basis pairs
  {
    bool ok = true;
    std::vector<Rational> ones(static_cast<std::size_t>(N), Rational(1));
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) {
        GMatrix expect = (i == j) ? scalar_matrix(d, Rational(2)) : GMatrix(d, d);
        ok = (symmetric_sum(ones, i, j) == expect);
      }
    check(report, "clifford_symmetric", ok);
  }
  {
    bool ok = true;
    for (int q = 1; 2 * q - 1 <= q_max && ok; ++q) {
      std::vector<Rational> coeff;
      for (const Summand& s : dec.summands) {
        Rational acc(0);
        for (int p = 0; p <= 2 * q - 1; ++p)
          acc += c_hat[static_cast<std::size_t>(2 * q - 1 - p)] *
                 pow_rational(-s.translated_weight, static_cast<unsigned>(p));
        coeff.push_back(std::move(acc));
      }
      for (int i = 0; i < n && ok; ++i)
        for (int j = i; j < n && ok; ++j) ok = symmetric_sum(coeff, i, j).is_zero();
    }
    check(report, "clifford_even_moment", ok);
  }

  // infinitesimal equivariance: pi_l(e_ij) p(e_k) = p(e_k) pi(e_ij)
  // + p(nat(e_ij) e_k), with pi_l the tensor action in block coordinates
  {
    bool ok = true;
    RepRealization nat = natural_rep(n);
    std::vector<GMatrix> tensor_upper = tensor_generators(rep, nat);
    for (int s = 0; s < N && ok; ++s) {
      const CliffordBlock& block = sys.blocks[static_cast<std::size_t>(s)];
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) {
          GMatrix pi_l = block.coords * (tensor_upper[flat(i, j, n)] * block.embed);
          for (int k = 0; k < n && ok; ++k) {
            GMatrix lhs = pi_l * block.maps[static_cast<std::size_t>(k)];
            GMatrix rhs = block.maps[static_cast<std::size_t>(k)] * rep.gen(i, j);
            if (k == i) rhs += block.maps[static_cast<std::size_t>(j)];
            if (k == j) rhs -= block.maps[static_cast<std::size_t>(i)];
            ok = (lhs == rhs);
          }
        }
    }
    check(report, "equivariance", ok);
  }

  // projector formula: Pi_lambda(phi tensor e_j) = sum_i p*(e_i)p(e_j)phi
  // tensor e_i, i.e. embed * p(e_j) stacked along the tensor slices
  {
    bool ok = true;
    std::size_t D = d * static_cast<std::size_t>(n);
    for (int s = 0; s < N && ok; ++s) {
      const CliffordBlock& block = sys.blocks[static_cast<std::size_t>(s)];
      for (int j = 0; j < n && ok; ++j) {
        GMatrix lhs = block.embed * block.maps[static_cast<std::size_t>(j)];
        GMatrix rhs(D, d);
        for (int i = 0; i < n; ++i) {
          GMatrix prod = block.adjoints[static_cast<std::size_t>(i)] *
                         block.maps[static_cast<std::size_t>(j)];
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
              rhs(r * static_cast<std::size_t>(n) + static_cast<std::size_t>(i), c) = prod(r, c);
        }
        ok = (lhs == rhs);
      }
    }
    check(report, "projector_formula", ok);
  }

  // Pfaffian identities (n even; the matching sums are capped at n = 8)
  if (ctx.even && n <= 8) {
    PfElements pf = pfaffian_elements(rep);

    check(report, "pf_scalar", pf.pf == scalar_matrix(d, pfaffian_eigenvalue(rep.rho)));

    std::vector<Rational> pf_coeff;
    for (const Summand& s : dec.summands) pf_coeff.push_back(*s.pf_eigenvalue);

    {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) ok = (sys.weighted_sum(pf_coeff, i, j) == pf.at(i, j));
      check(report, "pf_moment", ok);
    }
    {
      GMatrix acc(d, d);
      for (int i = 0; i < n; ++i) acc += sys.weighted_sum(pf_coeff, i, i);
      check(report, "pf_trace",
            acc == scalar_matrix(d, Rational(2 * ctx.m * pfaffian_eigenvalue(rep.rho))));
    }
    {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = i; j < n && ok; ++j) {
          GMatrix expect = (i == j)
                               ? scalar_matrix(d, Rational(2 * pfaffian_eigenvalue(rep.rho)))
                               : GMatrix(d, d);
          ok = (symmetric_sum(pf_coeff, i, j) == expect);
        }
      check(report, "pf_clifford", ok);
    }
    {
      std::vector<Rational> weighted;
      for (int s = 0; s < N; ++s)
        weighted.push_back(Rational(pf_coeff[static_cast<std::size_t>(s)] *
                                    (dec.summand(s).conformal_weight - 1)));
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = i; j < n && ok; ++j) ok = symmetric_sum(weighted, i, j).is_zero();
      check(report, "pf_clifford_weighted", ok);
    }
  }

  return report;
}

IdentityReport verify_identities(const RepRealization& rep, int q_max) {
  IdentityReport report = verify_enveloping_identities(rep, q_max);
  IdentityReport clifford = verify_clifford_identities(rep, q_max);
  report.items.insert(report.items.end(), clifford.items.begin(), clifford.items.end());
  return report;
}

}  // namespace weitz
