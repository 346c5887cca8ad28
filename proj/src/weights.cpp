#include "weitz/weights.hpp"

#include <algorithm>
#include <sstream>

namespace weitz {

WeightContext WeightContext::of(int n) {
  if (n < 3) fail(ErrorKind::RankMismatch, "ambient dimension must be at least 3");
  return WeightContext{n, n / 2, n % 2 == 0};
}

DominantWeight DominantWeight::validate(std::vector<Rational> entries, int n) {
  WeightContext ctx = WeightContext::of(n);
  std::size_t m = static_cast<std::size_t>(ctx.m);
  if (entries.size() > m)
    fail(ErrorKind::RankMismatch, "weight has more entries than the rank " + std::to_string(ctx.m));
  entries.resize(m, Rational(0));

  bool any_half = false, any_int = false;
  for (const Rational& e : entries) {
    if (!is_half_integral(e))
      fail(ErrorKind::MixedParity, "entry " + e.get_str() + " is not integral or half-integral");
    (is_half_odd(e) ? any_half : any_int) = true;
  }
  if (any_half && any_int)
    fail(ErrorKind::MixedParity, "entries mix integral and half-integral values");

  for (std::size_t i = 0; i + 1 < m; ++i) {
    Rational next = entries[i + 1];
    if (i + 2 == m && ctx.even) next = abs(next);
    if (entries[i] < next)
      fail(ErrorKind::NotDominant, "entries violate the dominance ordering");
  }
  if (!ctx.even && sgn(entries[m - 1]) < 0)
    fail(ErrorKind::NotDominant, "last entry must be nonnegative for odd n");

  return DominantWeight(ctx, std::move(entries));
}

bool DominantWeight::is_half_odd_class() const {
  for (const Rational& e : entries_)
    if (is_half_odd(e)) return true;
  return false;
}

bool DominantWeight::is_zero() const {
  for (const Rational& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

DominantWeight DominantWeight::conjugate() const {
  std::vector<Rational> e = entries_;
  e.back() = -e.back();
  return validate(std::move(e), ctx_.n);
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i].get_str();
  }
  os << ")";
  return os.str();
}

int lex_compare(const DominantWeight& a, const DominantWeight& b) {
  if (a.context() != b.context())
    fail(ErrorKind::RankMismatch, "lexicographic comparison across different contexts");
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    int c = cmp(a.entries()[i], b.entries()[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool WeightLess::operator()(const DominantWeight& a, const DominantWeight& b) const {
  if (a.n() != b.n()) return a.n() < b.n();
  return lex_compare(a, b) < 0;
}

std::vector<Rational> half_sum(int n) {
  WeightContext ctx = WeightContext::of(n);
  std::vector<Rational> d(static_cast<std::size_t>(ctx.m));
  for (int i = 0; i < ctx.m; ++i) {
    if (ctx.even)
      d[static_cast<std::size_t>(i)] = rat(ctx.m - 1 - i);
    else
      d[static_cast<std::size_t>(i)] = rat(2 * (ctx.m - i) - 1, 2);
  }
  return d;
}

Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) fail(ErrorKind::RankMismatch, "inner product of unequal ranks");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Positive roots: mu_i - mu_j and mu_i + mu_j for i < j (both families),
// plus the short roots mu_i for n odd.
Rational root_pairing(const std::vector<Rational>& v, int i, int j, int sign_j) {
  Rational r = v[static_cast<std::size_t>(i)];
  if (j >= 0) {
    if (sign_j > 0)
      r += v[static_cast<std::size_t>(j)];
    else
      r -= v[static_cast<std::size_t>(j)];
  }
  return r;
}

}  // namespace

Integer weyl_dim(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();
  std::vector<Rational> delta = half_sum(ctx.n);
  std::vector<Rational> shifted(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) shifted[i] = rho.entries()[i] + delta[i];

  Rational product(1);
  for (int i = 0; i < ctx.m; ++i) {
    for (int j = i + 1; j < ctx.m; ++j) {
      product *= root_pairing(shifted, i, j, -1) / root_pairing(delta, i, j, -1);
      product *= root_pairing(shifted, i, j, +1) / root_pairing(delta, i, j, +1);
    }
    if (!ctx.even) product *= root_pairing(shifted, i, -1, 0) / root_pairing(delta, i, -1, 0);
  }
  if (!is_integer(product))
    fail(ErrorKind::InternalNonInteger,
         "Weyl dimension of " + rho.str() + " evaluated to " + product.get_str());
  return product.get_num();
}

DominantWeight parse_weight(const std::string& text, int n) {
  std::vector<Rational> entries;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) entries.push_back(parse_rational(token));
  if (entries.empty()) fail(ErrorKind::ParseError, "empty weight");
  return DominantWeight::validate(std::move(entries), n);
}

}  // namespace weitz
