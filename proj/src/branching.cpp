#include "weitz/branching.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "weitz/casimir.hpp"

namespace weitz {

int Decomposition::index_of(const DominantWeight& lambda) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].lambda == lambda) return static_cast<int>(i);
  return -1;
}

namespace {

std::optional<DominantWeight> try_shift(const DominantWeight& rho, int i, int sign) {
  std::vector<Rational> e = rho.entries();
  e[static_cast<std::size_t>(i)] += sign;
  try {
    return DominantWeight::validate(std::move(e), rho.n());
  } catch (const Error&) {
    return std::nullopt;
  }
}

Summand make_summand(const DominantWeight& rho, DominantWeight lambda) {
  const WeightContext& ctx = rho.context();
  Rational w = conformal_weight_pair(rho, lambda);
  Rational w_hat = w + rat(ctx.n - 1, 2);
  Integer dim = weyl_dim(lambda);
  std::optional<Rational> pf;
  if (ctx.even) pf = pfaffian_eigenvalue(lambda);
  return Summand{std::move(lambda), std::move(w), std::move(w_hat), std::move(dim), std::move(pf)};
}

}  // namespace

Decomposition decompose(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();

  std::vector<DominantWeight> lambdas;
  for (int i = 0; i < ctx.m; ++i)
    for (int sign : {+1, -1})
      if (auto l = try_shift(rho, i, sign)) lambdas.push_back(std::move(*l));
  if (!ctx.even && sgn(rho.entries().back()) > 0) lambdas.push_back(rho);

  Decomposition dec{rho, {}, false, std::nullopt};
  for (DominantWeight& l : lambdas) dec.summands.push_back(make_summand(rho, std::move(l)));

  // Descending conformal weight, ties (the exceptional pair only) broken
  // lexicographically. For rho^m >= 0 this is plain lexicographic descending
  // order; when n is even and rho^m < 0 the two orders differ and the
  // conformal-weight chain is the one the Vandermonde factorizations need.
  std::sort(dec.summands.begin(), dec.summands.end(), [](const Summand& a, const Summand& b) {
    int c = cmp(a.conformal_weight, b.conformal_weight);
    if (c != 0) return c > 0;
    return lex_compare(a.lambda, b.lambda) > 0;
  });

  bool exceptional = ctx.even && sgn(rho.entry(ctx.m - 2)) > 0 && sgn(rho.entry(ctx.m - 1)) == 0;
  if (exceptional) {
    DominantWeight plus = *try_shift(rho, ctx.m - 1, +1);
    DominantWeight minus = *try_shift(rho, ctx.m - 1, -1);
    dec.exceptional = true;
    dec.exceptional_pair = {dec.index_of(plus), dec.index_of(minus)};
  }

  // Multiplicity one and the highest summand rho + mu_1.
  for (int i = 0; i + 1 < dec.count(); ++i)
    if (dec.summand(i).lambda == dec.summand(i + 1).lambda)
      fail(ErrorKind::RankDeficit, "duplicate summand in decomposition of " + rho.str());
  {
    std::vector<Rational> top = rho.entries();
    top[0] += 1;
    if (dec.summands.empty() || dec.summands.front().lambda.entries() != top)
      fail(ErrorKind::RankDeficit, "highest summand of " + rho.str() + " is not rho + mu_1");
  }

  // Dimension sum rule: sum d(lambda) = n d(rho).
  Integer total(0);
  for (const Summand& s : dec.summands) total += s.dimension;
  if (total != Integer(ctx.n) * weyl_dim(rho))
    fail(ErrorKind::RankDeficit, "dimension sum rule fails for " + rho.str());

  // Conformal weights strictly decrease, except one adjacent tie in the
  // exceptional case. A violation is a diagnostic, never silently reordered.
  int ties = 0;
  for (int i = 0; i + 1 < dec.count(); ++i) {
    int c = cmp(dec.summand(i).conformal_weight, dec.summand(i + 1).conformal_weight);
    if (c < 0)
      fail(ErrorKind::RankDeficit,
           "conformal weights out of order in decomposition of " + rho.str());
    if (c == 0) {
      ++ties;
      if (!exceptional || i != dec.exceptional_pair->first)
        fail(ErrorKind::RankDeficit,
             "unexpected conformal weight tie in decomposition of " + rho.str());
    }
  }
  if (exceptional && ties != 1)
    fail(ErrorKind::RankDeficit, "exceptional pair of " + rho.str() + " does not tie");

  return dec;
}

const Decomposition& decompose_cached(const DominantWeight& rho) {
  static std::mutex mu;
  static std::map<DominantWeight, Decomposition, WeightLess> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(rho);
  if (it == memo.end()) it = memo.emplace(rho, decompose(rho)).first;
  return it->second;
}

int summand_count(const DominantWeight& rho) { return decompose_cached(rho).count(); }

}  // namespace weitz
