#pragma once

#include <compare>
#include <string>
#include <vector>

#include "weitz/rational.hpp"

namespace weitz {

/// Ambient data for so(n): dimension n >= 3, rank m = floor(n/2).
struct WeightContext {
  int n = 0;
  int m = 0;
  bool even = false;

  static WeightContext of(int n);

  friend bool operator==(const WeightContext&, const WeightContext&) = default;
};

/// Highest weight of an irreducible so(n)-module: m entries, all integral or
/// all half-odd, weakly decreasing, last entry nonnegative (n odd) or of
/// arbitrary sign bounded by the previous entry (n even).
class DominantWeight {
public:
  /// Validates and constructs; throws MixedParity / NotDominant /
  /// RankMismatch. Entries shorter than the rank are padded with zeros.
  static DominantWeight validate(std::vector<Rational> entries, int n);

  const WeightContext& context() const { return ctx_; }
  int n() const { return ctx_.n; }
  int m() const { return ctx_.m; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool is_half_odd_class() const;
  bool is_zero() const;

  /// Same weight with the last entry negated (n even: the conjugate module).
  DominantWeight conjugate() const;

  std::string str() const;

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const DominantWeight& a, const DominantWeight& b) {
    return !(a == b);
  }

private:
  DominantWeight(WeightContext ctx, std::vector<Rational> entries)
      : ctx_(ctx), entries_(std::move(entries)) {}

  WeightContext ctx_;
  std::vector<Rational> entries_;
};

/// Lexicographic comparison; throws RankMismatch on different contexts.
int lex_compare(const DominantWeight& a, const DominantWeight& b);

/// Strict total order usable as a map comparator (orders by n first).
struct WeightLess {
  bool operator()(const DominantWeight& a, const DominantWeight& b) const;
};

/// Half the sum of the positive roots: (m-1, ..., 1, 0) for n = 2m and
/// (m-1/2, ..., 3/2, 1/2) for n = 2m+1.
std::vector<Rational> half_sum(int n);

/// Euclidean inner product of entry vectors; throws RankMismatch.
Rational inner(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Dimension by the Weyl product formula over the B_m / D_m positive roots.
/// The result is provably integral; a non-integer signals a bug.
Integer weyl_dim(const DominantWeight& rho);

/// Parses the CLI weight syntax: comma-separated rationals, zero-padded to
/// rank m, e.g. "1,1" or "1/2,1/2,-1/2".
DominantWeight parse_weight(const std::string& text, int n);

}  // namespace weitz
