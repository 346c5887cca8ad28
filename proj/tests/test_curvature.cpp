#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weitz/casimir.hpp"
#include "weitz/curvature.hpp"

using namespace weitz;

namespace {
DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }

GMatrix scalar(std::size_t dim, const Rational& v) {
  GMatrix m = GMatrix::identity(dim);
  m *= Gaussian(v);
  return m;
}

QMatrix random_traceless_symmetric(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  QMatrix E(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational v = rat(num(rng));
      E(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      E(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
  Rational tr(0);
  for (int i = 0; i < n; ++i) tr += E(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
  E(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1)) -= tr;
  return E;
}

QMatrix random_w3(std::uint64_t seed) {  // symmetric traceless 3x3
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  QMatrix W(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Rational v = rat(num(rng));
      W(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      W(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
    }
  W(2, 2) = Rational(-(W(0, 0) + W(1, 1)));
  return W;
}

}  // namespace

TEST_CASE("sphere tensor decomposes into its scalar part") {
  for (int n : {3, 4, 5, 6}) {
    AlgebraicCurvature R = AlgebraicCurvature::sphere(n, rat(2));
    CurvatureDecomposition dec = decompose_curvature(R);
    CHECK(dec.kappa == rat(2 * n * (n - 1)));
    CHECK(dec.E.is_zero());
    CHECK(dec.W.entries == AlgebraicCurvature::zero(n).entries);
    CHECK(dec.S == R);
  }
}

TEST_CASE("random tensors decompose and reassemble exactly") {
  for (int n : {3, 4, 5}) {
    for (std::uint64_t seed : {11u, 22u, 33u}) {
      AlgebraicCurvature R = AlgebraicCurvature::random(n, seed);
      CurvatureDecomposition dec = decompose_curvature(R);
      AlgebraicCurvature sum = dec.W;
      sum += dec.K;
      sum += dec.S;
      CHECK(sum == R);
      dec.W.validate();
      dec.K.validate();

      if (n == 3) CHECK(dec.W.entries == AlgebraicCurvature::zero(3).entries);

      // Ricci-flat input: the Weyl part itself
      CurvatureDecomposition again = decompose_curvature(dec.W);
      CHECK(again.E.is_zero());
      CHECK(sgn(again.kappa) == 0);
      CHECK(again.W == dec.W);
    }
  }
}

TEST_CASE("curvature action on the natural module") {
  RepRealization nat = natural_rep(5);
  AlgebraicCurvature zero = AlgebraicCurvature::zero(5);
  CHECK(curvature_action(zero, nat, 0, 1).is_zero());

  // sphere: R(e_i, e_j) = -c pi(e_ij), the sign fixed by the curvature
  // decomposition identity (checked against every part below)
  AlgebraicCurvature R = AlgebraicCurvature::sphere(5, rat(3));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      GMatrix expect = nat.pi(i, j);
      expect *= Gaussian(rat(-3));
      CHECK(curvature_action(R, nat, i, j) == expect);
      CHECK(curvature_action(R, nat, i, j) == -curvature_action(R, nat, j, i));
    }
}

TEST_CASE("curvature action obeys the decomposition identity") {
  RepRealization nat = natural_rep(4);
  auto halves = half_spin_reps(4);
  for (std::uint64_t seed : {5u, 6u}) {
    AlgebraicCurvature R = AlgebraicCurvature::random(4, seed);
    CurvatureDecomposition dec = decompose_curvature(R);
    for (const RepRealization* rep : {&nat, &halves.first}) {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          GMatrix lhs = curvature_action(R, *rep, i, j);
          GMatrix rhs = curvature_action(dec.W, *rep, i, j);
          for (int k = 0; k < 4; ++k) {
            GMatrix t1 = rep->pi(k, j);
            t1 *= Gaussian(dec.E(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
            rhs += t1;
            GMatrix t2 = rep->pi(k, i);
            t2 *= Gaussian(dec.E(static_cast<std::size_t>(j), static_cast<std::size_t>(k)));
            rhs -= t2;
          }
          GMatrix t3 = rep->pi(i, j);
          t3 *= Gaussian(Rational(dec.kappa / rat(4 * 3)));
          rhs -= t3;
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("curvature endomorphisms: scalars, self-adjointness, translation") {
  for (int n : {4, 5}) {
    RepRealization nat = natural_rep(n);
    EnvelopingPowers powers(nat, 3);

    // q = 0 vanishes
    AlgebraicCurvature R = AlgebraicCurvature::random(n, 77);
    CHECK(curvature_endomorphism_q(R, powers, 0).is_zero());

    // sphere: R^q = pi(c_{q+1}) kappa/(n(n-1))
    AlgebraicCurvature S = AlgebraicCurvature::sphere(n, rat(1, 2));
    for (int q = 0; q <= 3; ++q) {
      Rational expect = casimir_q(nat.rho, q + 1) * rat(1, 2);
      CHECK(curvature_endomorphism_q(S, powers, q) == scalar(nat.dim, expect));
    }

    // natural R^1 is twice the Ricci transformation
    {
      GMatrix r1 = curvature_endomorphism_q(R, powers, 1);
      GMatrix expect = to_gaussian(R.ricci());
      expect *= Gaussian(rat(2));
      CHECK(r1 == expect);
    }

    // self-adjointness and the hat translation
    std::vector<GMatrix> actions = curvature_actions(R, nat);
    for (int q = 0; q <= 3; ++q) {
      GMatrix rq = curvature_endomorphism_q(actions, powers, q);
      CHECK(is_self_adjoint(rq, nat.gram));
      GMatrix rq_hat = curvature_endomorphism_q_hat(actions, powers, q);
      GMatrix expect(nat.dim, nat.dim);
      for (int p = 0; p <= q; ++p) {
        GMatrix term = curvature_endomorphism_q(actions, powers, p);
        term *= Gaussian(Rational(binomial(static_cast<unsigned long>(q),
                                           static_cast<unsigned long>(p))) *
                         pow_rational(rat(n - 1, 2), static_cast<unsigned>(q - p)));
        expect += term;
      }
      CHECK(rq_hat == expect);
    }
  }
}

TEST_CASE("spinor R^1 is kappa/4") {
  {
    RepRealization spin = spinor_rep(5);
    EnvelopingPowers powers(spin, 1);
    AlgebraicCurvature R = AlgebraicCurvature::random(5, 99);
    CHECK(curvature_endomorphism_q(R, powers, 1) == scalar(spin.dim, Rational(R.scalar() / 4)));
  }
  {
    auto halves = half_spin_reps(4);
    EnvelopingPowers powers(halves.first, 1);
    AlgebraicCurvature R = AlgebraicCurvature::random(4, 100);
    CHECK(curvature_endomorphism_q(R, powers, 1) ==
          scalar(halves.first.dim, Rational(R.scalar() / 4)));
  }
}

TEST_CASE("Pfaffian endomorphism ignores the Einstein tensor") {
  auto halves = half_spin_reps(4);
  RepRealization nat = natural_rep(4);
  for (const RepRealization* rep : {&nat, &halves.first, &halves.second}) {
    PfElements pf = pfaffian_elements(*rep);
    for (std::uint64_t seed : {3u, 4u}) {
      AlgebraicCurvature R = AlgebraicCurvature::random(4, seed);
      CurvatureDecomposition dec = decompose_curvature(R);

      GMatrix full = curvature_endomorphism_pf(curvature_actions(R, *rep), *rep, pf);
      CHECK(is_self_adjoint(full, rep->gram));

      // Weyl-only plus the scalar part
      GMatrix expect = curvature_endomorphism_pf(curvature_actions(dec.W, *rep), *rep, pf);
      expect += scalar(rep->dim,
                       Rational(pfaffian_eigenvalue(rep->rho) * dec.kappa / rat(4 - 1)));
      CHECK(full == expect);

      // exact invariance under Einstein perturbations
      AlgebraicCurvature perturbed = R;
      perturbed += einstein_part_tensor(random_traceless_symmetric(4, seed + 1000));
      GMatrix moved = curvature_endomorphism_pf(curvature_actions(perturbed, *rep), *rep, pf);
      CHECK(moved == full);
    }
  }

  // conformally flat input: pure scalar
  {
    AlgebraicCurvature R = AlgebraicCurvature::sphere(4, rat(5, 3));
    R += einstein_part_tensor(random_traceless_symmetric(4, 42));
    const RepRealization& rep = halves.first;
    GMatrix out = curvature_endomorphism_pf(R, rep);
    CHECK(out == scalar(rep.dim, Rational(pfaffian_eigenvalue(rep.rho) * R.scalar() / 3)));
  }
}

TEST_CASE("four dimensional split and reassembly") {
  // sphere: both Weyl blocks and K vanish
  {
    FourDimSplit split = four_dim_split(AlgebraicCurvature::sphere(4, rat(2)));
    CHECK(split.Wplus.is_zero());
    CHECK(split.Wminus.is_zero());
    CHECK(split.K.is_zero());
    CHECK(split.kappa == rat(24));
  }

  for (std::uint64_t seed : {7u, 8u, 9u}) {
    AlgebraicCurvature R = AlgebraicCurvature::random(4, seed);
    FourDimSplit split = four_dim_split(R);
    CHECK(four_dim_assemble(split) == R);
  }

  // pure self-dual Weyl input
  {
    FourDimSplit split{random_w3(1), QMatrix(3, 3), QMatrix(3, 3), Rational(0)};
    AlgebraicCurvature R = four_dim_assemble(split);
    FourDimSplit back = four_dim_split(R);
    CHECK(back.Wplus == split.Wplus);
    CHECK(back.Wminus.is_zero());
    CHECK(back.K.is_zero());
    CHECK(sgn(back.kappa) == 0);
    // Ricci-flat, so pure Weyl in the rank-4 decomposition too
    CurvatureDecomposition dec = decompose_curvature(R);
    CHECK(dec.E.is_zero());
    CHECK(sgn(dec.kappa) == 0);
  }
}

TEST_CASE("half endomorphisms recombine to R^1 and R^pf") {
  std::vector<RepRealization> reps;
  reps.push_back(natural_rep(4));
  reps.push_back(build_rep(w("1,1", 4)));
  reps.push_back(build_rep(w("3/2,1/2", 4)));
  reps.push_back(build_rep(w("2,1", 4)));

  for (const RepRealization& rep : reps) {
    EnvelopingPowers powers(rep, 1);
    PfElements pf = pfaffian_elements(rep);
    for (std::uint64_t seed : {12u, 13u}) {
      AlgebraicCurvature R = AlgebraicCurvature::random(4, seed);
      auto [rp, rm] = four_dim_endomorphisms(R, rep);
      std::vector<GMatrix> actions = curvature_actions(R, rep);
      CHECK(rp + rm == curvature_endomorphism_q(actions, powers, 1));
      CHECK(rp - rm == curvature_endomorphism_pf(actions, rep, pf));
    }
  }
}

TEST_CASE("anti-self-dual endomorphism degeneracies") {
  // rho = (k/2, k/2): R^- vanishes
  for (int k : {1, 2, 3}) {
    RepRealization rep =
        build_rep(parse_weight(std::to_string(k) + "/2," + std::to_string(k) + "/2", 4));
    AlgebraicCurvature R = AlgebraicCurvature::random(4, 21);
    auto [rp, rm] = four_dim_endomorphisms(R, rep);
    CHECK(rm.is_zero());
    (void)rp;
  }

  // rho = ((k+1)/2, (k-1)/2): R^- has no anti-self-dual Weyl dependence
  for (int k : {1, 2}) {
    RepRealization rep =
        build_rep(parse_weight(std::to_string(k + 1) + "/2," + std::to_string(k - 1) + "/2", 4));
    AlgebraicCurvature R = AlgebraicCurvature::random(4, 31);
    FourDimSplit split = four_dim_split(R);
    FourDimSplit moved = split;
    moved.Wminus = random_w3(17);
    auto [rp1, rm1] = four_dim_endomorphisms(four_dim_assemble(split), rep);
    auto [rp2, rm2] = four_dim_endomorphisms(four_dim_assemble(moved), rep);
    CHECK(rm1 == rm2);
    (void)rp1;
    (void)rp2;
  }
}
