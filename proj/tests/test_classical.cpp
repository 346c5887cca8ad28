#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/classical.hpp"

using namespace weitz;

namespace {
DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }
}

TEST_CASE("spinor table: Lichnerowicz and Friedrich constants") {
  for (int n = 3; n <= 11; n += 2) {
    ClassicalTable t = classical_spinor(n);
    CHECK(t.constants.at("kappa_coefficient") == rat(1, 4));
    CHECK(t.constants.at("friedrich") == rat(n, 4 * (n - 1)));
    CHECK(t.constants.at("dirac_square") == rat(n));
    CHECK(t.constants.at("twistor_square") == rat(n) / rat(n - 1));

    // lichnerowicz lhs is n on the Dirac column, 0 on the twistor column
    CHECK(t.identities[0].lhs == std::vector<Rational>{rat(0), rat(n)});
    // friedrich lhs is D^2 - T*T
    CHECK(t.identities[1].lhs ==
          std::vector<Rational>{Rational(-rat(n) / rat(n - 1)), rat(n)});
  }
  CHECK(classical_spinor(5).constants.at("friedrich") == rat(5, 16));
}

TEST_CASE("forms table reproduces the classical fractions") {
  ClassicalTable t = classical_forms(7, 2);
  CHECK(t.constants.at("frac_d_gauduchon") == rat(2, 3));
  CHECK(t.constants.at("frac_dstar_gauduchon") == rat(5, 6));
  CHECK(t.constants.at("d_square") == rat(3));
  CHECK(t.constants.at("dstar_square") == rat(6));

  for (int n = 3; n <= 10; ++n) {
    int max_p = (n % 2 == 0) ? n / 2 - 1 : n / 2;
    for (int p = 1; p <= max_p; ++p) {
      ClassicalTable f = classical_forms(n, p);
      CHECK(f.constants.at("d_square") == rat(p + 1));
      CHECK(f.constants.at("dstar_square") == rat(n - p + 1));
      CHECK(f.constants.at("frac_d_laplacian") == rat(1, p + 1));
      CHECK(f.constants.at("frac_dstar_laplacian") == rat(1, n - p + 1));
      CHECK(f.constants.at("frac_d_gauduchon") == rat(p, p + 1));
      CHECK(f.constants.at("frac_dstar_gauduchon") == rat(n - p, n - p + 1));
      CHECK(f.constants.at("gallot_meyer") == rat(static_cast<long>(p) * (n - p + 1)));
    }
  }
  CHECK(classical_forms(6, 2).constants.at("gallot_meyer") == rat(10));
  CHECK_THROWS_AS(classical_forms(6, 3), Error);
  CHECK_THROWS_AS(classical_forms(7, 0), Error);
}

TEST_CASE("pf family reduction") {
  // m=2, p=1: coefficients 3, 1/3, 1/4
  PfFamilyReduction r = pf_family_reduction(w("1,1", 4));
  CHECK(r.d2_coefficient == rat(3));
  CHECK(r.kappa_coefficient == rat(1, 3));
  CHECK(r.weyl_coefficient == rat(1, 4));
  CHECK(r.proportional);
  CHECK(r.proportionality_constant == rat(2));

  // m=3, p=1: 4, 3/10, 1/4
  PfFamilyReduction r6 = pf_family_reduction(w("1,1,1", 6));
  CHECK(r6.d2_coefficient == rat(4));
  CHECK(r6.kappa_coefficient == rat(3, 10));
  CHECK(r6.weyl_coefficient == rat(1, 4));
  CHECK(r6.proportional);

  for (int m : {2, 3})
    for (const char* ps : {"1", "3/2", "2"}) {
      Rational p = parse_rational(ps);
      std::vector<Rational> e(static_cast<std::size_t>(m), p);
      DominantWeight rho = DominantWeight::validate(e, 2 * m);
      PfFamilyReduction red = pf_family_reduction(rho);
      CHECK(red.d2_coefficient == Rational((2 * p + m - 1) / p));
      CHECK(red.kappa_coefficient == Rational((p + m - 1) / rat(4 * m - 2)));
      CHECK(red.weyl_coefficient == Rational(1 / (4 * p)));
      CHECK(red.proportional);
      CHECK(red.proportionality_constant == Rational(p * (p + m - 1)));

      // conjugate family member behaves identically
      PfFamilyReduction conj = pf_family_reduction(rho.conjugate());
      CHECK(conj.d2_coefficient == red.d2_coefficient);
      CHECK(conj.proportional);
    }

  CHECK_THROWS_AS(pf_family_reduction(w("2,1", 4)), Error);
  CHECK_THROWS_AS(pf_family_reduction(w("1,1", 5)), Error);
}

TEST_CASE("weyl tensor table") {
  for (int n = 5; n <= 10; ++n) {
    ClassicalTable t = classical_weyl(n);
    CHECK(t.constants.at("d2_coefficient") == rat(n + 1, 2));
    CHECK(t.constants.at("r1_coefficient") == rat(1, 4));
    // the combined row vanishes on the conformal-Killing-type column
    int idx1 = -1;
    for (std::size_t i = 0; i < t.operator_names.size(); ++i)
      if (t.operator_names[i] == "D_1") idx1 = static_cast<int>(i);
    REQUIRE(idx1 >= 0);
    CHECK(t.identities[0].lhs[static_cast<std::size_t>(idx1)] == rat(0));
  }
  CHECK(classical_weyl(7).constants.at("d2_coefficient") == rat(4));
}

TEST_CASE("four dimensional table rows") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      ClassicalTable t = classical_fourdim(k, l);
      REQUIRE(t.identities.size() == 3);
      CHECK(t.identities[0].lhs == std::vector<Rational>(4, rat(1)));
      CHECK(t.identities[1].lhs ==
            std::vector<Rational>{rat(k), rat(k), rat(-(k + 2)), rat(-(k + 2))});
      CHECK(t.identities[2].lhs ==
            std::vector<Rational>{rat(l), rat(-(l + 2)), rat(l), rat(-(l + 2))});
    }
  // spec example: bw --n 4 --weight 3/2,1/2 is (k,l) = (2,1)
  ClassicalTable t = normalize_against(w("3/2,1/2", 4), ClassicalTarget::FourDim);
  CHECK(t.constants.at("k") == rat(2));
  CHECK(t.constants.at("l") == rat(1));
}

TEST_CASE("exceptional table") {
  ClassicalTable t = classical_exceptional(w("1", 4));
  CHECK(t.constants.at("pf_plus") == rat(2));
  CHECK(t.constants.at("rhs_scale") == rat(-1, 8));
  ClassicalTable t6 = classical_exceptional(w("1,1", 6));
  CHECK(t6.constants.at("pf_plus") == rat(6));
  CHECK(t6.constants.at("rhs_scale") == rat(-1, 24));
}

TEST_CASE("normalize_against validates the family") {
  CHECK_THROWS_AS(normalize_against(w("1", 5), ClassicalTarget::Spinor), Error);
  CHECK_THROWS_AS(normalize_against(w("1,1", 5), ClassicalTarget::PfFamily), Error);
  CHECK_NOTHROW(normalize_against(w("1/2,1/2,1/2", 7), ClassicalTarget::Spinor));
  CHECK_THROWS_AS(parse_classical_target("nope"), Error);
}
