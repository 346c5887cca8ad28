#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weitz/linalg.hpp"
#include "weitz/matrix.hpp"

using namespace weitz;

namespace {

QMatrix random_qmatrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rat(num(rng), den(rng));
  return m;
}

GMatrix random_gmatrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  GMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Gaussian(rat(num(rng)), rat(num(rng), 2));
  return m;
}

}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(parse_rational(" 5 / 10 ") == rat(1, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("gaussian field arithmetic") {
  Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(rat(-1)));
  Gaussian z(rat(2), rat(-3));
  Gaussian inv = Gaussian(1) / z;
  CHECK(z * inv == Gaussian(1));
  CHECK(z.conj() == Gaussian(rat(2), rat(3)));
  CHECK(parse_gaussian(to_string(z)) == z);
  CHECK(parse_gaussian("-1/2+3/4*i") == Gaussian(rat(-1, 2), rat(3, 4)));
  CHECK(parse_gaussian("i") == i);
  CHECK(to_string(Gaussian()) == "0");
}

TEST_CASE("parallel matmul agrees with the serial reference") {
  std::mt19937 rng(12345);
  for (std::size_t size : {5u, 24u, 40u}) {
    QMatrix a = random_qmatrix(size, size, rng);
    QMatrix b = random_qmatrix(size, size, rng);
    CHECK(matmul(a, b) == matmul_serial(a, b));
  }
  GMatrix a = random_gmatrix(30, 30, rng);
  GMatrix b = random_gmatrix(30, 30, rng);
  CHECK(matmul(a, b) == matmul_serial(a, b));
}

TEST_CASE("rank and inverse are exact") {
  QMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = rat(1, 2);
  CHECK(rank(m) == 2);

  std::mt19937 rng(99);
  QMatrix a = random_qmatrix(6, 6, rng);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == QMatrix::identity(6));
}

TEST_CASE("solve recovers exact solutions") {
  QMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = rat(1, 2);
  a(1, 0) = 1; a(1, 1) = rat(-3, 2);
  std::vector<Rational> b = {rat(5, 2), rat(-3, 2)};
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(3, 2));
  CHECK((*x)[1] == rat(2));
}

TEST_CASE("row span membership") {
  QMatrix rows(2, 3);
  rows(0, 0) = 1; rows(0, 1) = 1; rows(0, 2) = 1;
  rows(1, 0) = 0; rows(1, 1) = 1; rows(1, 2) = 2;
  CHECK(in_row_span(rows, {rat(2), rat(3), rat(4)}));
  CHECK_FALSE(in_row_span(rows, {rat(1), rat(0), rat(1)}));
}

TEST_CASE("Gram-Schmidt produces an orthogonal basis with diagonal Gram") {
  std::mt19937 rng(7);
  GMatrix b = random_gmatrix(6, 3, rng);
  GMatrix ortho = orthogonalize_columns(b, nullptr);
  GMatrix g = induced_gram(ortho, nullptr);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(g(i, j).is_zero());
    }
  // Same column space: each original column in the span of the new ones.
  GMatrix both(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      both(i, j) = ortho(i, j);
      both(i, 3 + j) = b(i, j);
    }
  CHECK(rank(both) == rank(ortho));
}

TEST_CASE("kron dimensions and content") {
  QMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  QMatrix id = QMatrix::identity(3);
  QMatrix k = kron(a, id);
  CHECK(k.rows() == 6);
  CHECK(k(0, 0) == rat(1));
  CHECK(k(0, 3) == rat(2));
  CHECK(k(4, 1) == rat(3));
  CHECK(k(2, 2) == rat(1));
}
