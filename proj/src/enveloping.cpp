#include "weitz/enveloping.hpp"

#include <algorithm>

namespace weitz {

namespace {

std::size_t flat(int i, int j, int n) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

}  // namespace

EnvelopingPowers::EnvelopingPowers(const RepRealization& rep, int q_max)
    : rep_(&rep), q_max_(q_max) {
  int n = rep.ctx.n;
  std::size_t d = rep.dim;
  std::size_t cells = static_cast<std::size_t>(n) * n;

  plain_.resize(static_cast<std::size_t>(q_max) + 1);
  hat_.resize(static_cast<std::size_t>(q_max) + 1);

  // level 0: delta_ij identity
  plain_[0].assign(cells, GMatrix(d, d));
  hat_[0].assign(cells, GMatrix(d, d));
  for (int i = 0; i < n; ++i) {
    plain_[0][flat(i, i, n)] = GMatrix::identity(d);
    hat_[0][flat(i, i, n)] = GMatrix::identity(d);
  }
  if (q_max == 0) return;

  plain_[1].assign(cells, GMatrix());
  hat_[1].assign(cells, GMatrix());
  GMatrix half_shift = GMatrix::identity(d);
  half_shift *= Gaussian(rat(n - 1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GMatrix g = rep.pi(i, j);
      plain_[1][flat(i, j, n)] = g;
      if (i == j) g += half_shift;
      hat_[1][flat(i, j, n)] = std::move(g);
    }

  // product law: e^{q+1}_ij = sum_k e^q_ik e^1_kj (and the same for e^)
  for (int q = 2; q <= q_max; ++q) {
    plain_[static_cast<std::size_t>(q)].assign(cells, GMatrix());
    hat_[static_cast<std::size_t>(q)].assign(cells, GMatrix());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GMatrix acc_p(d, d), acc_h(d, d);
        for (int k = 0; k < n; ++k) {
          if (!plain_[static_cast<std::size_t>(q - 1)][flat(i, k, n)].is_zero() &&
              !plain_[1][flat(k, j, n)].is_zero())
            acc_p += plain_[static_cast<std::size_t>(q - 1)][flat(i, k, n)] *
                     plain_[1][flat(k, j, n)];
          acc_h += hat_[static_cast<std::size_t>(q - 1)][flat(i, k, n)] * hat_[1][flat(k, j, n)];
        }
        plain_[static_cast<std::size_t>(q)][flat(i, j, n)] = std::move(acc_p);
        hat_[static_cast<std::size_t>(q)][flat(i, j, n)] = std::move(acc_h);
      }
  }
}

const GMatrix& EnvelopingPowers::e_power(int i, int j, int q) const {
  if (q < 0 || q > q_max_) fail(ErrorKind::IndexOutOfRange, "power out of range");
  return plain_[static_cast<std::size_t>(q)][flat(i, j, rep_->ctx.n)];
}

const GMatrix& EnvelopingPowers::e_hat_power(int i, int j, int q) const {
  if (q < 0 || q > q_max_) fail(ErrorKind::IndexOutOfRange, "power out of range");
  return hat_[static_cast<std::size_t>(q)][flat(i, j, rep_->ctx.n)];
}

namespace {

Rational scalar_of(const GMatrix& m, const char* what) {
  std::size_t d = m.rows();
  const Gaussian& v = m(0, 0);
  if (!v.is_real()) fail(ErrorKind::EigenvalueCollision, std::string(what) + " is not real");
  GMatrix expect = GMatrix::identity(d);
  expect *= v;
  if (m != expect) fail(ErrorKind::EigenvalueCollision, std::string(what) + " is not scalar");
  return v.re;
}

}  // namespace

Rational EnvelopingPowers::casimir_matrix_eigenvalue(int q) const {
  int n = rep_->ctx.n;
  GMatrix acc(rep_->dim, rep_->dim);
  for (int i = 0; i < n; ++i) acc += e_power(i, i, q);
  return scalar_of(acc, "trace of generator powers");
}

Rational EnvelopingPowers::casimir_hat_matrix_eigenvalue(int q) const {
  int n = rep_->ctx.n;
  GMatrix acc(rep_->dim, rep_->dim);
  for (int i = 0; i < n; ++i) acc += e_hat_power(i, i, q);
  return scalar_of(acc, "trace of translated generator powers");
}

namespace {

// Canonical perfect matchings of a sorted ground set: pairs (a_k, b_k) with
// a_k < b_k and a_1 < a_2 < ...; the permutation sign is that of the
// flattened sequence relative to the sorted ground set.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  int sign;
};

int sequence_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void enumerate_matchings(std::vector<int> remaining, std::vector<std::pair<int, int>>& acc,
                         std::vector<Matching>& out) {
  if (remaining.empty()) {
    std::vector<int> seq;
    for (auto& [a, b] : acc) {
      seq.push_back(a);
      seq.push_back(b);
    }
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    // relabel by rank so the sign is relative to the sorted ground set
    std::vector<int> ranks(seq.size());
    for (std::size_t t = 0; t < seq.size(); ++t)
      ranks[t] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[t]) -
                                  sorted.begin());
    out.push_back(Matching{acc, sequence_sign(ranks)});
    return;
  }
  int first = remaining.front();
  for (std::size_t t = 1; t < remaining.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t s = 1; s < remaining.size(); ++s)
      if (s != t) rest.push_back(remaining[s]);
    acc.emplace_back(first, remaining[t]);
    enumerate_matchings(std::move(rest), acc, out);
    acc.pop_back();
  }
}

std::vector<Matching> matchings_of(std::vector<int> ground) {
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> acc;
  enumerate_matchings(std::move(ground), acc, out);
  return out;
}

Gaussian i_power(int k) {  // i^k for any integer k
  int r = ((k % 4) + 4) % 4;
  switch (r) {
    case 0: return Gaussian(1);
    case 1: return Gaussian::i();
    case 2: return Gaussian(rat(-1));
    default: return -Gaussian::i();
  }
}

}  // namespace

GMatrix PfElements::at(int i, int j) const {
  if (i == j) return pf;
  if (i < j) return upper[flat(i, j, n)];
  return -upper[flat(j, i, n)];
}

PfElements pfaffian_elements(int n, std::size_t dim, const std::vector<GMatrix>& upper) {
  if (n % 2 != 0) fail(ErrorKind::OddDimension, "Pfaffian elements need even n");
  if (n > 8) fail(ErrorKind::BudgetExceeded, "Pfaffian sum capped at n = 8");
  int m = n / 2;

  auto signed_product = [&](const Matching& match) {
    GMatrix acc = GMatrix::identity(dim);
    for (auto& [a, b] : match.pairs) acc = acc * upper[flat(a, b, n)];
    if (match.sign < 0) acc *= Gaussian(rat(-1));
    return acc;
  };

  PfElements out;
  out.n = n;

  {
    std::vector<int> ground(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) ground[static_cast<std::size_t>(t)] = t;
    GMatrix acc(dim, dim);
    for (const Matching& match : matchings_of(ground)) acc += signed_product(match);
    acc *= i_power(-m);
    out.pf = std::move(acc);
  }

  out.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> ground;
      for (int t = 0; t < n; ++t)
        if (t != i && t != j) ground.push_back(t);
      GMatrix acc(dim, dim);
      for (const Matching& match : matchings_of(ground)) acc += signed_product(match);
      acc *= i_power(-m);
      // indices in the prefactor are 1-based: (-1)^{i+j}
      if ((i + j) % 2 != 0) acc *= Gaussian(rat(-1));
      out.upper[flat(i, j, n)] = std::move(acc);
    }
  return out;
}

PfElements pfaffian_elements(const RepRealization& rep) {
  return pfaffian_elements(rep.ctx.n, rep.dim, rep.upper);
}

}  // namespace weitz
