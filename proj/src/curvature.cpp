#include "weitz/curvature.hpp"

#include <functional>
#include <random>

namespace weitz {

AlgebraicCurvature AlgebraicCurvature::zero(int n) {
  return AlgebraicCurvature{n, std::vector<Rational>(static_cast<std::size_t>(n) * n * n * n,
                                                     Rational(0))};
}

AlgebraicCurvature AlgebraicCurvature::sphere(int n, const Rational& c) {
  AlgebraicCurvature R = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      R.at(i, j, j, i) = c;
      R.at(i, j, i, j) = -c;
    }
  return R;
}

AlgebraicCurvature AlgebraicCurvature::random(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  AlgebraicCurvature T = zero(n);
  for (Rational& v : T.entries) v = rat(num(rng), den(rng));

  // project onto the pair symmetries
  AlgebraicCurvature S = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational v = T.at(i, j, k, l);
          v -= T.at(j, i, k, l);
          v -= T.at(i, j, l, k);
          v += T.at(j, i, l, k);
          v += T.at(k, l, i, j);
          v -= T.at(l, k, i, j);
          v -= T.at(k, l, j, i);
          v += T.at(l, k, j, i);
          S.at(i, j, k, l) = Rational(v / 8);
        }

  // subtract the totally antisymmetric Bianchi obstruction
  AlgebraicCurvature R = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational b = S.at(i, j, k, l);
          b += S.at(j, k, i, l);
          b += S.at(k, i, j, l);
          R.at(i, j, k, l) = Rational(S.at(i, j, k, l) - b / 3);
        }
  R.validate();
  return R;
}

void AlgebraicCurvature::validate() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Rational& v = at(i, j, k, l);
          if (v != -at(j, i, k, l) || v != -at(i, j, l, k) || v != at(k, l, i, j))
            fail(ErrorKind::SymmetryViolation, "curvature pair symmetries violated");
          Rational b = v;
          b += at(j, k, i, l);
          b += at(k, i, j, l);
          if (sgn(b) != 0) fail(ErrorKind::BianchiViolation, "first Bianchi identity violated");
        }
}

QMatrix AlgebraicCurvature::ricci() const {
  QMatrix ric(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v(0);
      for (int k = 0; k < n; ++k) v += at(i, k, k, j);
      ric(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(v);
    }
  return ric;
}

Rational AlgebraicCurvature::scalar() const {
  QMatrix ric = ricci();
  Rational v(0);
  for (int i = 0; i < n; ++i) v += ric(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  return v;
}

AlgebraicCurvature& AlgebraicCurvature::operator+=(const AlgebraicCurvature& o) {
  for (std::size_t t = 0; t < entries.size(); ++t) entries[t] += o.entries[t];
  return *this;
}

AlgebraicCurvature& AlgebraicCurvature::operator-=(const AlgebraicCurvature& o) {
  for (std::size_t t = 0; t < entries.size(); ++t) entries[t] -= o.entries[t];
  return *this;
}

AlgebraicCurvature einstein_part_tensor(const QMatrix& E) {
  int n = static_cast<int>(E.rows());
  AlgebraicCurvature K = AlgebraicCurvature::zero(n);
  auto e = [&](int a, int b) { return E(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational v(0);
          if (j == l) v += e(i, k);
          if (i == k) v += e(j, l);
          if (j == k) v -= e(i, l);
          if (i == l) v -= e(j, k);
          K.at(i, j, k, l) = std::move(v);
        }
  return K;
}

CurvatureDecomposition decompose_curvature(const AlgebraicCurvature& R) {
  R.validate();
  int n = R.n;
  if (n < 3) fail(ErrorKind::WrongDimension, "curvature decomposition needs n >= 3");

  Rational kappa = R.scalar();
  QMatrix ric = R.ricci();

  QMatrix E(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = (i == j) ? Rational(kappa / n) : Rational(0);
      v -= ric(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      E(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(v / (n - 2));
    }

  CurvatureDecomposition out{AlgebraicCurvature::zero(n), einstein_part_tensor(E),
                             AlgebraicCurvature::sphere(n, Rational(kappa / (n * (n - 1)))),
                             std::move(E), std::move(kappa)};
  out.W = R;
  out.W -= out.K;
  out.W -= out.S;

  // Eq. checks: tracelessness of the Weyl part and of the Einstein tensor.
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      Rational trace(0);
      for (int i = 0; i < n; ++i) trace += out.W.at(i, j, i, l);
      if (sgn(trace) != 0)
        fail(ErrorKind::SymmetryViolation, "Weyl part of the decomposition is not trace-free");
    }
  Rational e_trace(0);
  for (int i = 0; i < n; ++i)
    e_trace += out.E(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  if (sgn(e_trace) != 0 || out.E != out.E.transpose())
    fail(ErrorKind::SymmetryViolation, "Einstein tensor is not symmetric trace-free");

  return out;
}

GMatrix curvature_action(const AlgebraicCurvature& R, const RepRealization& rep, int i, int j) {
  if (i < 0 || j < 0 || i >= R.n || j >= R.n)
    fail(ErrorKind::IndexOutOfRange, "curvature action index out of range");
  if (rep.ctx.n != R.n) fail(ErrorKind::WrongDimension, "module and curvature dimension differ");
  GMatrix acc(rep.dim, rep.dim);
  for (int k = 0; k < R.n; ++k)
    for (int l = k + 1; l < R.n; ++l) {
      const Rational& v = R.at(i, j, k, l);
      if (sgn(v) == 0) continue;
      GMatrix term = rep.gen(k, l);
      term *= Gaussian(v);
      acc += term;
    }
  return acc;
}

std::vector<GMatrix> curvature_actions(const AlgebraicCurvature& R, const RepRealization& rep) {
  int n = R.n;
  std::vector<GMatrix> actions(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      actions[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
          curvature_action(R, rep, i, j);
  return actions;
}

namespace {

// sum_ij T_ij A_ij with A the (precomputed, i<j) actions and T an
// (i,j)-indexed family with T_ji = -T_ij + 2 delta_ij T_ii: the diagonal
// never contributes because A_ii = 0.
GMatrix contract_actions(const std::vector<GMatrix>& actions, int n, std::size_t dim,
                         const std::function<GMatrix(int, int)>& element) {
  GMatrix acc(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const GMatrix& a = actions[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
      // element(i,j) A_ij + element(j,i) A_ji = (element(i,j) - element(j,i)) A_ij
      acc += (element(i, j) - element(j, i)) * a;
    }
  return acc;
}

}  // namespace

GMatrix curvature_endomorphism_q(const std::vector<GMatrix>& actions,
                                 const EnvelopingPowers& powers, int q) {
  const RepRealization& rep = powers.rep();
  return contract_actions(actions, rep.ctx.n, rep.dim,
                          [&](int i, int j) { return powers.e_power(i, j, q); });
}

GMatrix curvature_endomorphism_q(const AlgebraicCurvature& R, const EnvelopingPowers& powers,
                                 int q) {
  return curvature_endomorphism_q(curvature_actions(R, powers.rep()), powers, q);
}

GMatrix curvature_endomorphism_q_hat(const std::vector<GMatrix>& actions,
                                     const EnvelopingPowers& powers, int q) {
  const RepRealization& rep = powers.rep();
  return contract_actions(actions, rep.ctx.n, rep.dim,
                          [&](int i, int j) { return powers.e_hat_power(i, j, q); });
}

GMatrix curvature_endomorphism_q_hat(const AlgebraicCurvature& R, const EnvelopingPowers& powers,
                                     int q) {
  return curvature_endomorphism_q_hat(curvature_actions(R, powers.rep()), powers, q);
}

GMatrix curvature_endomorphism_pf(const std::vector<GMatrix>& actions, const RepRealization& rep,
                                  const PfElements& pf) {
  return contract_actions(actions, rep.ctx.n, rep.dim,
                          [&](int i, int j) { return pf.at(i, j); });
}

GMatrix curvature_endomorphism_pf(const AlgebraicCurvature& R, const RepRealization& rep) {
  return curvature_endomorphism_pf(curvature_actions(R, rep), rep, pfaffian_elements(rep));
}

std::vector<QMatrix> self_dual_basis(bool plus) {
  // X_1^± = (e_14 ± e_23)/2, X_2^± = (-e_13 ± e_24)/2, X_3^± = (e_12 ± e_34)/2
  Rational h = rat(1, 2);
  Rational s = plus ? h : Rational(-h);
  std::vector<QMatrix> xs(3, QMatrix(4, 4));
  xs[0](0, 3) = h;
  xs[0](1, 2) = s;
  xs[1](0, 2) = -h;
  xs[1](1, 3) = s;
  xs[2](0, 1) = h;
  xs[2](2, 3) = s;
  return xs;
}

namespace {

// R_T applied to a 2-form with coefficients a (antisymmetric storage, i<j):
// b_kl = sum_{i<j} a_ij R_ijkl.
QMatrix apply_curvature_operator(const AlgebraicCurvature& R, const QMatrix& a) {
  int n = R.n;
  QMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      Rational v(0);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Rational& c = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          if (sgn(c) == 0) continue;
          v += c * R.at(i, j, k, l);
        }
      b(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = std::move(v);
    }
  return b;
}

// <x, y> for 2-form coefficient matrices (orthonormal basis e_ij, i<j).
Rational form_inner(const QMatrix& x, const QMatrix& y) {
  Rational v(0);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i + 1; j < x.cols(); ++j) v += x(i, j) * y(i, j);
  return v;
}

}  // namespace

FourDimSplit four_dim_split(const AlgebraicCurvature& R) {
  if (R.n != 4) fail(ErrorKind::WrongDimension, "the self-dual split needs n = 4");
  R.validate();
  Rational kappa = R.scalar();

  std::vector<QMatrix> xp = self_dual_basis(true);
  std::vector<QMatrix> xm = self_dual_basis(false);

  // coefficients against the half-norm basis: <X_a, X_a> = 1/2
  FourDimSplit out{QMatrix(3, 3), QMatrix(3, 3), QMatrix(3, 3), kappa};
  for (int a = 0; a < 3; ++a) {
    QMatrix rp = apply_curvature_operator(R, xp[static_cast<std::size_t>(a)]);
    QMatrix rm = apply_curvature_operator(R, xm[static_cast<std::size_t>(a)]);
    for (int b = 0; b < 3; ++b) {
      // R_T(X_a^+) = sum_b W+_ab X_b^+ + sum_b K_ba X_b^- - kappa/12 X_a^+
      Rational pp = 2 * form_inner(rp, xp[static_cast<std::size_t>(b)]);
      Rational pm = 2 * form_inner(rp, xm[static_cast<std::size_t>(b)]);
      Rational mm = 2 * form_inner(rm, xm[static_cast<std::size_t>(b)]);
      if (a == b) {
        pp += Rational(kappa / 12);
        mm += Rational(kappa / 12);
      }
      out.Wplus(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = pp;
      out.Wminus(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = mm;
      out.K(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = pm;
    }
  }

  if (out.Wplus != out.Wplus.transpose() || out.Wminus != out.Wminus.transpose())
    fail(ErrorKind::SymmetryViolation, "self-dual blocks are not symmetric");
  Rational tp(0), tm(0);
  for (std::size_t a = 0; a < 3; ++a) {
    tp += out.Wplus(a, a);
    tm += out.Wminus(a, a);
  }
  if (sgn(tp) != 0 || sgn(tm) != 0)
    fail(ErrorKind::SymmetryViolation, "self-dual blocks are not trace-free");
  return out;
}

AlgebraicCurvature four_dim_assemble(const FourDimSplit& split) {
  std::vector<QMatrix> xp = self_dual_basis(true);
  std::vector<QMatrix> xm = self_dual_basis(false);

  // R_T(e_ij) = sum_a 2<e_ij, X_a^+> R_T(X_a^+) + (same with minus);
  // R_ijkl is the e_kl coefficient (k < l) extended by antisymmetry.
  auto image_of = [&](int a, bool plus) {
    QMatrix img(4, 4);
    const QMatrix& w = plus ? split.Wplus : split.Wminus;
    const std::vector<QMatrix>& same = plus ? xp : xm;
    const std::vector<QMatrix>& other = plus ? xm : xp;
    for (int b = 0; b < 3; ++b) {
      Rational cw = w(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      Rational ck = plus ? split.K(static_cast<std::size_t>(b), static_cast<std::size_t>(a))
                         : split.K(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          img(i, j) += cw * same[static_cast<std::size_t>(b)](i, j);
          img(i, j) += ck * other[static_cast<std::size_t>(b)](i, j);
        }
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        img(i, j) -= Rational(split.kappa / 12) * same[static_cast<std::size_t>(a)](i, j);
    return img;
  };

  AlgebraicCurvature R = AlgebraicCurvature::zero(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      QMatrix e_ij(4, 4);
      e_ij(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
      QMatrix img(4, 4);
      for (int a = 0; a < 3; ++a) {
        Rational cp = 2 * form_inner(e_ij, xp[static_cast<std::size_t>(a)]);
        Rational cm = 2 * form_inner(e_ij, xm[static_cast<std::size_t>(a)]);
        if (sgn(cp) != 0) {
          QMatrix t = image_of(a, true);
          t *= cp;
          img += t;
        }
        if (sgn(cm) != 0) {
          QMatrix t = image_of(a, false);
          t *= cm;
          img += t;
        }
      }
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          const Rational& v = img(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
          R.at(i, j, k, l) = v;
          R.at(j, i, k, l) = -v;
          R.at(i, j, l, k) = -v;
          R.at(j, i, l, k) = v;
        }
    }
  R.validate();
  return R;
}

std::pair<GMatrix, GMatrix> four_dim_endomorphisms(const AlgebraicCurvature& R,
                                                   const RepRealization& rep) {
  if (R.n != 4 || rep.ctx.n != 4)
    fail(ErrorKind::WrongDimension, "the split endomorphisms need n = 4");

  auto build = [&](bool plus) {
    std::vector<QMatrix> xs = self_dual_basis(plus);
    GMatrix acc(rep.dim, rep.dim);
    for (const QMatrix& x : xs) {
      QMatrix rx = apply_curvature_operator(R, x);
      acc += rep.pi_element(x) * rep.pi_element(rx);
    }
    acc *= Gaussian(rat(4));
    return acc;
  };
  return {build(true), build(false)};
}

}  // namespace weitz
