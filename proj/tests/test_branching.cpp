#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/branching.hpp"
#include "weitz/casimir.hpp"
#include "weitz/grids.hpp"

using namespace weitz;

namespace {
DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }
}

TEST_CASE("spinor weight decomposes into twistor and spinor parts") {
  for (int n : {3, 5, 7, 9}) {
    int m = n / 2;
    std::vector<Rational> e(static_cast<std::size_t>(m), rat(1, 2));
    DominantWeight rho = DominantWeight::validate(e, n);
    Decomposition dec = decompose(rho);
    REQUIRE(dec.count() == 2);
    std::vector<Rational> top = e;
    top[0] = rat(3, 2);
    CHECK(dec.summand(0).lambda.entries() == top);
    CHECK(dec.summand(1).lambda == rho);
    CHECK_FALSE(dec.exceptional);
  }
}

TEST_CASE("forms weight decomposes into three summands") {
  Decomposition dec = decompose(w("1,1", 7));  // p = 2
  REQUIRE(dec.count() == 3);
  CHECK(dec.summand(0).lambda == w("2,1", 7));
  CHECK(dec.summand(1).lambda == w("1,1,1", 7));
  CHECK(dec.summand(2).lambda == w("1", 7));
  CHECK(summand_count(w("1,1", 7)) == 3);
}

TEST_CASE("n=4 natural weight is the exceptional case") {
  Decomposition dec = decompose(w("1", 4));
  REQUIRE(dec.count() == 4);
  CHECK(dec.summand(0).lambda == w("2", 4));
  CHECK(dec.summand(1).lambda == w("1,1", 4));
  CHECK(dec.summand(2).lambda == w("1,-1", 4));
  CHECK(dec.summand(3).lambda == w("0", 4));
  CHECK(dec.exceptional);
  REQUIRE(dec.exceptional_pair.has_value());
  CHECK(dec.exceptional_pair->first == 1);
  CHECK(dec.exceptional_pair->second == 2);

  // dimensions 9 + 3 + 3 + 1 = 16
  CHECK(dec.summand(0).dimension == 9);
  CHECK(dec.summand(1).dimension == 3);
  CHECK(dec.summand(2).dimension == 3);
  CHECK(dec.summand(3).dimension == 1);

  // exceptional pf eigenvalues are opposite and nonzero
  CHECK(*dec.summand(1).pf_eigenvalue == rat(2));
  CHECK(*dec.summand(2).pf_eigenvalue == rat(-2));
}

TEST_CASE("trivial weight has a single summand") {
  for (int n : {3, 4, 5, 6}) {
    CHECK(summand_count(w("0", n)) == 1);
    Decomposition dec = decompose(w("0", n));
    CHECK(dec.summand(0).lambda == w("1", n));
  }
}

TEST_CASE("dimension sum rule and ordering across the sweep grid") {
  for (int n = 3; n <= 8; ++n) {
    for (const DominantWeight& rho : weight_grid(n, rat(2))) {
      Decomposition dec = decompose(rho);  // construction validates the sum rule
      Integer total(0);
      for (const Summand& s : dec.summands) total += s.dimension;
      CHECK(total == Integer(n) * weyl_dim(rho));

      // multiplicity one
      for (int i = 0; i < dec.count(); ++i)
        for (int j = i + 1; j < dec.count(); ++j)
          CHECK(dec.summand(i).lambda != dec.summand(j).lambda);

      // for rho^m >= 0 the order is also lexicographically descending
      if (n % 2 != 0 || sgn(rho.entries().back()) >= 0)
        for (int i = 0; i + 1 < dec.count(); ++i)
          CHECK(lex_compare(dec.summand(i).lambda, dec.summand(i + 1).lambda) > 0);

      // the conformal weight chain strictly decreases except one
      // exceptional tie
      for (int i = 0; i + 1 < dec.count(); ++i) {
        int c = cmp(dec.summand(i).conformal_weight, dec.summand(i + 1).conformal_weight);
        if (dec.exceptional && i == dec.exceptional_pair->first)
          CHECK(c == 0);
        else
          CHECK(c > 0);
      }

      // translated weight offset
      for (const Summand& s : dec.summands)
        CHECK(s.translated_weight - s.conformal_weight == rat(n - 1, 2));

      // closed forms of the conformal weight per shift direction
      for (const Summand& s : dec.summands) {
        if (s.lambda == rho) {
          CHECK(s.conformal_weight == rat(-(n - 1), 2));
          continue;
        }
        for (int i = 0; i < rho.m(); ++i) {
          Rational diff = s.lambda.entry(i) - rho.entry(i);
          if (sgn(diff) == 0) continue;
          if (diff == rat(1))
            CHECK(s.conformal_weight == rho.entry(i) + 1 - (i + 1));
          else
            CHECK(s.conformal_weight == -rho.entry(i) - n + (i + 1) + 1);
        }
      }

      // coarse bound |w| <= rho^1 + n
      for (const Summand& s : dec.summands)
        CHECK(abs(s.conformal_weight) <= rho.entry(0) + n);

      if (dec.exceptional) {
        int a = dec.exceptional_pair->first, b = dec.exceptional_pair->second;
        CHECK(dec.summand(a).conformal_weight == dec.summand(b).conformal_weight);
        CHECK(*dec.summand(a).pf_eigenvalue == -*dec.summand(b).pf_eigenvalue);
        CHECK(sgn(*dec.summand(a).pf_eigenvalue) != 0);
      }
    }
  }
}

TEST_CASE("conformal weight requires summand membership") {
  DominantWeight rho = w("1", 5);
  CHECK(conformal_weight(rho, w("0", 5)) == rat(-4));
  CHECK_THROWS_AS(conformal_weight(rho, w("3", 5)), Error);
}
