#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "weitz/weights.hpp"

namespace weitz {

/// One irreducible component lambda of V_rho tensor C^n.
struct Summand {
  DominantWeight lambda;
  Rational conformal_weight;    // w(rho;lambda)
  Rational translated_weight;   // w + (n-1)/2
  Integer dimension;
  std::optional<Rational> pf_eigenvalue;  // n even only
};

/// Full multiplicity-one decomposition of V_rho tensor C^n, summands ordered
/// by strictly descending conformal weight (equal to lexicographically
/// descending order whenever rho^m >= 0; for n even with rho^m < 0 the two
/// orders differ and the conformal-weight chain takes precedence). In the
/// exceptional case (n = 2m, rho^{m-1} > 0, rho^m = 0) exactly one adjacent
/// pair of summands shares a conformal weight, lambda_+ listed first.
struct Decomposition {
  DominantWeight rho;
  std::vector<Summand> summands;
  bool exceptional = false;
  std::optional<std::pair<int, int>> exceptional_pair;  // indices of lambda_+, lambda_-

  int count() const { return static_cast<int>(summands.size()); }
  const Summand& summand(int i) const { return summands[static_cast<std::size_t>(i)]; }

  /// Index of lambda in the summand list, or -1.
  int index_of(const DominantWeight& lambda) const;
};

/// Candidates rho +- mu_i, plus rho itself exactly when n is odd and
/// rho^m > 0; kept when dominant. Validates the dimension sum rule and the
/// conformal-weight ordering on construction.
Decomposition decompose(const DominantWeight& rho);

/// Memoized variant; safe for concurrent callers.
const Decomposition& decompose_cached(const DominantWeight& rho);

int summand_count(const DominantWeight& rho);

}  // namespace weitz
