#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/casimir.hpp"
#include "weitz/grids.hpp"

using namespace weitz;

namespace {
DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }
}

TEST_CASE("quadratic Casimir eigenvalues") {
  for (int n = 3; n <= 9; ++n) CHECK(casimir2(w("1", n)) == rat(2 * (n - 1)));
  CHECK(casimir2(w("0", 5)) == rat(0));
  CHECK(casimir2(w("1/2,1/2", 5)) == rat(5));
}

TEST_CASE("conformal weights from the Casimir difference") {
  DominantWeight rho = w("1/2,1/2,1/2", 7);
  CHECK(conformal_weight(rho, rho) == rat(-3));  // -(n-1)/2
  CHECK(conformal_weight(rho, w("3/2,1/2,1/2", 7)) == rat(1, 2));
  CHECK(conformal_weight(w("1", 5), w("0", 5)) == rat(-4));
}

TEST_CASE("higher Casimir eigenvalues through the branching sum") {
  DominantWeight rho = w("1", 5);
  CHECK(casimir_q(rho, 0) == rat(5));
  CHECK(casimir_q(rho, 1) == rat(0));
  CHECK(casimir_q(rho, 2) == rat(8));
  CHECK(casimir_q(rho, 2) == casimir2(rho));

  for (int n = 3; n <= 8; ++n)
    for (const DominantWeight& r : weight_grid(n, rat(3, 2))) {
      CHECK(casimir_q(r, 0) == rat(n));
      CHECK(casimir_q(r, 1) == rat(0));
      CHECK(casimir_q(r, 2) == casimir2(r));
    }
}

TEST_CASE("translated Casimir eigenvalues") {
  DominantWeight rho = w("1", 5);
  CHECK(casimir_hat_q(rho, 0) == rat(5));
  CHECK(casimir_hat_q(rho, 1) == rat(10));  // n(n-1)/2
  CHECK(casimir_hat_q(rho, 2) == rat(28));

  // Binomial translation: c^_q = sum binom(q,p) ((n-1)/2)^{q-p} c_p.
  for (int n : {4, 5, 6, 7}) {
    for (const DominantWeight& r : weight_grid(n, rat(3, 2))) {
      for (int q = 0; q <= 6; ++q) {
        Rational expect(0);
        for (int p = 0; p <= q; ++p)
          expect += Rational(binomial(static_cast<unsigned long>(q), static_cast<unsigned long>(p))) *
                    pow_rational(rat(n - 1, 2), static_cast<unsigned>(q - p)) * casimir_q(r, p);
        CHECK(casimir_hat_q(r, q) == expect);
      }
    }
  }
}

TEST_CASE("Pfaffian eigenvalues") {
  CHECK(pfaffian_eigenvalue(w("1,1", 4)) == rat(2));
  CHECK(pfaffian_eigenvalue(w("1/2,-1/2", 4)) == rat(-3, 4));
  CHECK(pfaffian_eigenvalue(w("3,0", 4)) == rat(0));
  CHECK(pfaffian_eigenvalue(w("2,2,1", 6)) == rat(12));
  CHECK_THROWS_AS(pfaffian_eigenvalue(w("1", 5)), Error);

  // conjugation negates pf
  for (const DominantWeight& r : weight_grid(6, rat(3, 2)))
    CHECK(pfaffian_eigenvalue(r.conjugate()) == -pfaffian_eigenvalue(r));
}

TEST_CASE("translated Casimir identity of the trace relation") {
  CHECK(verify_c_identity(w("0", 5), 0));
  CHECK(verify_c_identity(w("1", 5), 1));
  CHECK(verify_c_identity(w("1/2,1/2", 5), 2));
  for (int n = 3; n <= 8; ++n)
    for (const DominantWeight& r : weight_grid(n, rat(3, 2)))
      for (int q = 0; q <= 4; ++q) CHECK(verify_c_identity(r, q));
}

TEST_CASE("Pfaffian relations across decompositions") {
  CHECK(verify_pf_relations(w("1", 4)));
  CHECK(verify_pf_relations(w("1/2,1/2", 4)));
  CHECK(verify_pf_relations(w("0", 4)));
  for (int n : {4, 6, 8})
    for (const DominantWeight& r : weight_grid(n, rat(2)))
      CHECK(verify_pf_relations(r));
}

TEST_CASE("casimir table shape") {
  CasimirTable t = casimir_table(w("1,1", 4), 4);
  CHECK(t.c.at(0) == rat(4));
  CHECK(t.c.at(1) == rat(0));
  CHECK(t.c_hat.at(1) == rat(6));
  REQUIRE(t.pf.has_value());
  CHECK(*t.pf == rat(2));
}

TEST_CASE("recursion coefficients match the closed form") {
  for (int n : {4, 5}) {
    for (const char* s : {"1", "2,1"}) {
      DominantWeight rho = w(s, n);
      RecursionCoefficients rc = recursion_coefficients(rho, 6);
      CHECK(rc.at(0, 0) == rat(1));
      CHECK(rc.at(1, 0) == rat(n - 1));
      CHECK(rc.at(1, 1) == rat(-1));
      for (int q = 0; q <= 6; ++q)
        for (int p = 0; p <= q; ++p)
          CHECK(rc.at(q, p) == recursion_coefficient_closed_form(rho, q, p));
    }
  }
}
