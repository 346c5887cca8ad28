#include "weitz/grids.hpp"

#include <algorithm>

namespace weitz {

namespace {

void extend(std::vector<std::vector<Rational>>& out, std::vector<Rational>& prefix,
            const std::vector<Rational>& values, const WeightContext& ctx) {
  std::size_t m = static_cast<std::size_t>(ctx.m);
  if (prefix.size() == m) {
    out.push_back(prefix);
    return;
  }
  bool last = prefix.size() + 1 == m;
  const Rational bound = prefix.empty() ? values.front() : prefix.back();
  for (const Rational& v : values) {
    if (v > bound) continue;
    prefix.push_back(v);
    extend(out, prefix, values, ctx);
    prefix.pop_back();
    if (last && ctx.even && sgn(v) > 0) {
      prefix.push_back(Rational(-v));
      extend(out, prefix, values, ctx);
      prefix.pop_back();
    }
  }
}

std::vector<std::vector<Rational>> tuples_for_class(const WeightContext& ctx,
                                                    const Rational& max_entry, bool half_class) {
  std::vector<Rational> values;
  Rational v = half_class ? rat(1, 2) : Rational(0);
  while (v <= max_entry) {
    values.push_back(v);
    v += 1;
  }
  std::sort(values.begin(), values.end(), std::greater<Rational>());
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> prefix;
  if (!values.empty()) extend(out, prefix, values, ctx);
  return out;
}

}  // namespace

std::vector<DominantWeight> weight_grid(int n, const Rational& max_entry) {
  WeightContext ctx = WeightContext::of(n);
  std::vector<DominantWeight> grid;
  for (bool half_class : {false, true})
    for (std::vector<Rational>& entries : tuples_for_class(ctx, max_entry, half_class))
      grid.push_back(DominantWeight::validate(std::move(entries), n));
  return grid;
}

}  // namespace weitz
