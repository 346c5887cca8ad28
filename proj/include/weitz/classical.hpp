#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weitz/bw.hpp"

namespace weitz {

enum class ClassicalTarget { Spinor, Forms, PfFamily, WeylTensor, FourDim, Exceptional };

ClassicalTarget parse_classical_target(const std::string& name);
std::string classical_target_name(ClassicalTarget t);

struct ClassicalParams {
  int p = 0;            // Forms: exterior degree
  int k = 0, l = 0;     // FourDim
  std::vector<DominantWeight> mask;  // WeylTensor: summands whose gradients
                                     // the second Bianchi identity kills;
                                     // empty selects the standard set
};

/// A classical identity as an exact linear combination of generator rows:
///   row = sum_j scale_j * row_j + laplacian_shift * (all-ones row),
/// presented per classical-table column (lhs).
struct ClassicalIdentity {
  std::string label;
  std::vector<std::pair<BWFormula, Rational>> combination;
  Rational laplacian_shift;
  std::vector<Rational> lhs;  // one coefficient per table column
  std::string rhs;            // human-readable right-hand side
};

struct ClassicalTable {
  ClassicalTarget target;
  DominantWeight rho;
  std::vector<std::string> operator_names;  // per table column
  // Decomposition indices backing each column; a column with several
  // indices merges summands whose rows always agree there (the d-column of
  // the middle-degree forms table).
  std::vector<std::vector<int>> column_summands;
  std::vector<Rational> operator_squares;   // classical-op^2 = square * D*D
  std::vector<ClassicalIdentity> identities;
  std::map<std::string, Rational> constants;
};

/// The paper-table normalizations, all derived from the general generator
/// rows (never hard-coded vectors). Throws WeightMismatch when rho does not
/// belong to the target family and UnknownTarget for a bad target.
ClassicalTable normalize_against(const DominantWeight& rho, ClassicalTarget target,
                                 const ClassicalParams& params = {});

// Convenience builders that construct the family weight themselves.
ClassicalTable classical_spinor(int n);
ClassicalTable classical_forms(int n, int p);
ClassicalTable classical_pf_family(int n, const Rational& p);
ClassicalTable classical_weyl(int n);
ClassicalTable classical_fourdim(int k, int l);
ClassicalTable classical_exceptional(const DominantWeight& rho);

/// The single-operator reduction for rho = (p, ..., p, ±p) over so(2m):
///   ((2p+m-1)/p) D_2* D_2 = nabla*nabla + kappa_coefficient * kappa
///                          + weyl_coefficient * sum W pi(e e).
struct PfFamilyReduction {
  DominantWeight rho;
  Rational d2_coefficient;
  Rational kappa_coefficient;
  Rational weyl_coefficient;
  Rational proportionality_constant;  // p(p+m-1)
  bool proportional;  // pf(rho) * R^1-row == p(p+m-1) * pf-row, exact vectors
};

PfFamilyReduction pf_family_reduction(const DominantWeight& rho);

}  // namespace weitz
