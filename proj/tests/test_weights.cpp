#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "weitz/weights.hpp"

using namespace weitz;

namespace {

DominantWeight w(const std::string& s, int n) { return parse_weight(s, n); }

bool fails_with(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("validate accepts dominant weights and pads zeros") {
  DominantWeight a = w("1,1,0", 7);
  CHECK(a.m() == 3);
  CHECK(a.entries()[2] == rat(0));
  DominantWeight b = w("1,1", 7);
  CHECK(a == b);

  // Even n allows a negative last entry.
  DominantWeight c = w("1/2,1/2,-1/2", 6);
  CHECK(c.is_half_odd_class());
}

TEST_CASE("validate rejects bad weights") {
  CHECK(fails_with(ErrorKind::NotDominant, [] { parse_weight("1,2", 5); }));
  CHECK(fails_with(ErrorKind::MixedParity, [] { parse_weight("1,1/2", 5); }));
  CHECK(fails_with(ErrorKind::NotDominant, [] { parse_weight("1,-1", 5); }));
  CHECK(fails_with(ErrorKind::RankMismatch, [] { parse_weight("1,1,1", 5); }));
  CHECK(fails_with(ErrorKind::MixedParity, [] { parse_weight("1/3", 5); }));
  CHECK(fails_with(ErrorKind::NotDominant, [] { parse_weight("1,-2", 4); }));
}

TEST_CASE("half sum of positive roots") {
  CHECK(half_sum(5) == std::vector<Rational>{rat(3, 2), rat(1, 2)});
  CHECK(half_sum(4) == std::vector<Rational>{rat(1), rat(0)});
  CHECK(half_sum(3) == std::vector<Rational>{rat(1, 2)});

  for (int n = 3; n <= 12; ++n) {
    std::vector<Rational> d = half_sum(n);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i] > d[i + 1]);
    CHECK(d.back() == (n % 2 == 0 ? rat(0) : rat(1, 2)));
  }
}

TEST_CASE("inner product") {
  CHECK(inner({rat(1), rat(0)}, {rat(1), rat(0)}) == rat(1));
  CHECK(inner({rat(1), rat(1)}, {rat(3, 2), rat(1, 2)}) == rat(2));
  CHECK(inner({rat(0), rat(0)}, {rat(5), rat(-7)}) == rat(0));
  CHECK_THROWS_AS(inner({rat(1)}, {rat(1), rat(2)}), Error);
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(w("1", 5)) == 5);
  CHECK(weyl_dim(w("1/2,1/2", 5)) == 4);   // gamma-matrix spinor dimension 2^m
  CHECK(weyl_dim(w("1,1", 5)) == 10);      // Lambda^2(C^5)
  CHECK(weyl_dim(w("2", 5)) == 14);
  CHECK(weyl_dim(w("0", 3)) == 1);
  CHECK(weyl_dim(w("1,1", 4)) == 3);
  CHECK(weyl_dim(w("1,-1", 4)) == 3);

  for (int n = 3; n <= 11; ++n) CHECK(weyl_dim(w("1", n)) == n);
}

TEST_CASE("dim of (1_p) matches binomials and conjugation preserves dim") {
  for (int n = 3; n <= 10; ++n) {
    int m = n / 2;
    for (int p = 1; p <= m - 1; ++p) {
      std::vector<Rational> e(static_cast<std::size_t>(p), rat(1));
      DominantWeight rho = DominantWeight::validate(e, n);
      CHECK(weyl_dim(rho) == binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(p)));
    }
  }
  for (const char* s : {"2,1", "3,-2", "1/2,-1/2"}) {
    DominantWeight rho = w(s, 4);
    CHECK(weyl_dim(rho) == weyl_dim(rho.conjugate()));
  }
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_compare(w("2,0", 5), w("1,1", 5)) > 0);
  CHECK(lex_compare(w("1,1", 4), w("1,-1", 4)) > 0);
  CHECK(lex_compare(w("1,0", 5), w("1,0", 5)) == 0);
  CHECK_THROWS_AS(lex_compare(w("1", 5), w("1", 7)), Error);
}
