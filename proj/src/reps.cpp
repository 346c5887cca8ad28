#include "weitz/reps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "weitz/casimir.hpp"
#include "weitz/enveloping.hpp"

namespace weitz {

namespace {

std::size_t flat(int i, int j, int n) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
}

GMatrix casimir2_matrix(int n, const std::vector<GMatrix>& upper, std::size_t dim) {
  // c_2 = sum_{i,j} e_ij e_ji = -2 sum_{i<j} e_ij^2
  GMatrix c2(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const GMatrix& g = upper[flat(i, j, n)];
      c2 -= g * g;
    }
  c2 *= Gaussian(rat(2));
  return c2;
}

GMatrix scalar_matrix(std::size_t dim, const Rational& v) {
  GMatrix m = GMatrix::identity(dim);
  m *= Gaussian(v);
  return m;
}

}  // namespace

GMatrix RepRealization::pi(int i, int j) const {
  if (i < 0 || j < 0 || i >= ctx.n || j >= ctx.n)
    fail(ErrorKind::IndexOutOfRange, "generator index out of range");
  if (i == j) return GMatrix(dim, dim);
  if (i < j) return gen(i, j);
  return -gen(j, i);
}

GMatrix RepRealization::pi_element(const QMatrix& coeffs) const {
  GMatrix out(dim, dim);
  for (int i = 0; i < ctx.n; ++i)
    for (int j = i + 1; j < ctx.n; ++j) {
      const Rational& c = coeffs(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (sgn(c) == 0) continue;
      GMatrix term = gen(i, j);
      term *= Gaussian(c);
      out += term;
    }
  return out;
}

void RepRealization::validate() const {
  if (Integer(static_cast<unsigned long>(dim)) != weyl_dim(rho) || dim == 0)
    fail(ErrorKind::InternalNonInteger,
         "realization of " + rho.str() + " has dimension " + std::to_string(dim));

  int n = ctx.n;
  // bracket relations [e_kl, e_ij] = d_ki e_lj + d_kj e_il - d_il e_kj - d_lj e_ik
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          GMatrix lhs = commutator(gen(k, l), gen(i, j));
          GMatrix rhs(dim, dim);
          if (k == i) rhs += pi(l, j);
          if (k == j) rhs += pi(i, l);
          if (i == l) rhs -= pi(k, j);
          if (l == j) rhs -= pi(i, k);
          if (lhs != rhs)
            fail(ErrorKind::SymmetryViolation,
                 "bracket relation fails in realization of " + rho.str());
        }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const GMatrix& g = gen(i, j);
      if (g.conj_transpose() * gram != -(gram * g))
        fail(ErrorKind::SymmetryViolation,
             "generator not skew-Hermitian in realization of " + rho.str());
    }

  if (casimir2_matrix(n, upper, dim) != scalar_matrix(dim, casimir2(rho)))
    fail(ErrorKind::EigenvalueCollision,
         "quadratic Casimir is not the expected scalar on " + rho.str());
}

RepRealization natural_rep(int n) {
  WeightContext ctx = WeightContext::of(n);
  std::vector<Rational> e(static_cast<std::size_t>(ctx.m), Rational(0));
  e[0] = 1;
  DominantWeight mu1 = DominantWeight::validate(std::move(e), n);

  RepRealization rep{ctx, mu1, static_cast<std::size_t>(n), {},
                     GMatrix::identity(static_cast<std::size_t>(n)), true};
  rep.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GMatrix g(rep.dim, rep.dim);
      g(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = Gaussian(1);
      g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Gaussian(rat(-1));
      rep.upper[flat(i, j, n)] = std::move(g);
    }
  rep.validate();
  return rep;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

// Replace member `from` with `to` in a sorted monomial; returns the target
// basis index and the resorting sign, or nothing when `to` already occurs.
struct WedgeTarget {
  std::size_t index;
  int sign;
};

std::optional<WedgeTarget> replace_in_subset(const std::vector<int>& subset, int from, int to,
                                             const std::map<std::vector<int>, std::size_t>& at) {
  int pos_from = -1;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (subset[a] == to) return std::nullopt;
    if (subset[a] == from) pos_from = static_cast<int>(a);
  }
  if (pos_from < 0) return std::nullopt;
  std::vector<int> next;
  next.reserve(subset.size());
  for (int v : subset)
    if (v != from) next.push_back(v);
  std::size_t insert_pos = 0;
  while (insert_pos < next.size() && next[insert_pos] < to) ++insert_pos;
  next.insert(next.begin() + static_cast<std::ptrdiff_t>(insert_pos), to);
  int swaps = std::abs(static_cast<int>(insert_pos) - pos_from);
  return WedgeTarget{at.at(next), (swaps % 2 == 0) ? 1 : -1};
}

std::vector<GMatrix> exterior_generators(int n, int p, std::size_t& dim_out) {
  std::vector<std::vector<int>> basis = subsets_of_size(n, p);
  std::map<std::vector<int>, std::size_t> at;
  for (std::size_t b = 0; b < basis.size(); ++b) at[basis[b]] = b;
  std::size_t dim = basis.size();

  std::vector<GMatrix> upper(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GMatrix g(dim, dim);
      for (std::size_t b = 0; b < dim; ++b) {
        // derivation of pi(e_ij): e_i -> e_j, e_j -> -e_i inside the monomial
        if (auto t = replace_in_subset(basis[b], i, j, at))
          g(t->index, b) += Gaussian(rat(t->sign));
        if (auto t = replace_in_subset(basis[b], j, i, at))
          g(t->index, b) -= Gaussian(rat(t->sign));
      }
      upper[flat(i, j, n)] = std::move(g);
    }
  dim_out = dim;
  return upper;
}

}  // namespace

RepRealization exterior_rep(int n, int p) {
  WeightContext ctx = WeightContext::of(n);
  if (ctx.even && p == ctx.m)
    fail(ErrorKind::ReducibleRequest,
         "Lambda^m of so(2m) is reducible; use exterior_middle_split");
  if (p < 1 || p > ctx.m)
    fail(ErrorKind::IndexOutOfRange, "exterior degree must be in 1..m");

  std::size_t dim = 0;
  std::vector<GMatrix> upper = exterior_generators(n, p, dim);

  std::vector<Rational> e(static_cast<std::size_t>(ctx.m), Rational(0));
  for (int i = 0; i < p; ++i) e[static_cast<std::size_t>(i)] = 1;
  DominantWeight rho = DominantWeight::validate(std::move(e), n);

  RepRealization rep{ctx, rho, dim, std::move(upper), GMatrix::identity(dim), true};
  rep.validate();
  return rep;
}

SpinorConstruction spinor_construction(int n) {
  WeightContext ctx = WeightContext::of(n);
  int m = ctx.m;
  std::size_t dim = std::size_t(1) << m;

  GMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1(0, 1) = Gaussian(1);
  s1(1, 0) = Gaussian(1);
  s2(0, 1) = -Gaussian::i();
  s2(1, 0) = Gaussian::i();
  s3(0, 0) = Gaussian(1);
  s3(1, 1) = Gaussian(rat(-1));
  GMatrix id2 = GMatrix::identity(2);

  // Hermitian Gamma_a with Gamma_a Gamma_b + Gamma_b Gamma_a = 2 delta;
  // gamma_a = i Gamma_a then satisfies the -2 delta convention over Q(i).
  auto chain = [&](int slot, const GMatrix& mid) {
    GMatrix acc(1, 1);
    acc(0, 0) = Gaussian(1);
    for (int t = 0; t < m; ++t) acc = kron(acc, t < slot ? s3 : (t == slot ? mid : id2));
    return acc;
  };

  SpinorConstruction sc;
  sc.n = n;
  sc.dim = dim;
  for (int k = 0; k < m; ++k) {
    sc.gamma.push_back(chain(k, s1));
    sc.gamma.push_back(chain(k, s2));
  }
  if (!ctx.even) sc.gamma.push_back(chain(m, s3));  // slot m beyond range: all factors s3
  for (GMatrix& g : sc.gamma) g *= Gaussian::i();

  sc.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GMatrix g = sc.gamma[static_cast<std::size_t>(i)] * sc.gamma[static_cast<std::size_t>(j)];
      g *= Gaussian(rat(1, 2));
      sc.upper[flat(i, j, n)] = std::move(g);
    }

  if (ctx.even) {
    // chirality = i^m gamma_1 ... gamma_n; squares to one and is diagonal
    // in this construction
    GMatrix omega = GMatrix::identity(dim);
    for (const GMatrix& g : sc.gamma) omega = omega * g;
    Gaussian im(1);
    for (int t = 0; t < m; ++t) im *= Gaussian::i();
    omega *= im;
    if (omega * omega != GMatrix::identity(dim))
      fail(ErrorKind::SymmetryViolation, "chirality does not square to one");
    sc.chirality = std::move(omega);
  }
  return sc;
}

RepRealization spinor_rep(int n) {
  WeightContext ctx = WeightContext::of(n);
  if (ctx.even)
    fail(ErrorKind::ReducibleRequest, "even spinor module is reducible; use half_spin_reps");
  SpinorConstruction sc = spinor_construction(n);
  std::vector<Rational> e(static_cast<std::size_t>(ctx.m), rat(1, 2));
  RepRealization rep{ctx, DominantWeight::validate(std::move(e), n), sc.dim,
                     std::move(sc.upper), GMatrix::identity(sc.dim), true};
  rep.validate();
  return rep;
}

std::pair<RepRealization, RepRealization> half_spin_reps(int n) {
  WeightContext ctx = WeightContext::of(n);
  if (!ctx.even) fail(ErrorKind::OddDimension, "half-spin modules need even n");
  SpinorConstruction sc = spinor_construction(n);

  std::vector<std::size_t> plus_idx, minus_idx;
  for (std::size_t r = 0; r < sc.dim; ++r) {
    const Gaussian& d = sc.chirality(r, r);
    if (d == Gaussian(1))
      plus_idx.push_back(r);
    else if (d == Gaussian(rat(-1)))
      minus_idx.push_back(r);
    else
      fail(ErrorKind::SymmetryViolation, "chirality is not diagonal ±1");
  }

  auto restrict_to = [&](const std::vector<std::size_t>& idx, const Rational& last_entry) {
    std::vector<Rational> e(static_cast<std::size_t>(ctx.m), rat(1, 2));
    e.back() = last_entry;
    RepRealization rep{ctx, DominantWeight::validate(std::move(e), n), idx.size(), {},
                       GMatrix::identity(idx.size()), true};
    rep.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const GMatrix& big = sc.upper[flat(i, j, n)];
        GMatrix small(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
          for (std::size_t c = 0; c < idx.size(); ++c) small(r, c) = big(idx[r], idx[c]);
        rep.upper[flat(i, j, n)] = std::move(small);
      }
    return rep;
  };

  RepRealization a = restrict_to(plus_idx, rat(1, 2));
  RepRealization b = restrict_to(minus_idx, rat(-1, 2));

  // The chirality sign alone does not decide which block carries which
  // label; the Pfaffian eigenvalue does.
  Rational expect_plus = pfaffian_eigenvalue(a.rho);
  PfElements pf_a = pfaffian_elements(n, a.dim, a.upper);
  if (pf_a.pf != scalar_matrix(a.dim, expect_plus)) {
    std::swap(a.upper, b.upper);
    if (pfaffian_elements(n, a.dim, a.upper).pf != scalar_matrix(a.dim, expect_plus))
      fail(ErrorKind::EigenvalueCollision, "half-spin Pfaffian labels cannot be assigned");
  }
  a.validate();
  b.validate();
  return {std::move(a), std::move(b)};
}

namespace {

struct SpectralBlock {
  GMatrix basis;  // orthogonalized columns
  GMatrix gram;
  GMatrix gram_inverse;
};

// Column space of an exact projector, orthogonalized against the ambient
// Hermitian form (null = identity).
SpectralBlock extract_block(const GMatrix& projector, const GMatrix* ambient_gram) {
  GMatrix basis = column_space_basis(projector);
  GMatrix ortho = orthogonalize_columns(basis, ambient_gram);
  GMatrix g = induced_gram(ortho, ambient_gram);
  auto g_inv = inverse(g);
  if (!g_inv) fail(ErrorKind::EigenvalueCollision, "degenerate Gram on a spectral block");
  return SpectralBlock{std::move(ortho), std::move(g), std::move(*g_inv)};
}

GMatrix spectral_projector(const GMatrix& op, std::size_t dim, const Rational& eigen,
                           const std::vector<Rational>& others) {
  GMatrix proj = GMatrix::identity(dim);
  for (const Rational& v : others) {
    GMatrix factor = op;
    factor -= scalar_matrix(dim, v);
    factor *= Gaussian(Rational(1) / Rational(eigen - v));
    proj = proj * factor;
  }
  return proj;
}

}  // namespace

std::pair<RepRealization, RepRealization> exterior_middle_split(int n) {
  WeightContext ctx = WeightContext::of(n);
  if (!ctx.even) fail(ErrorKind::OddDimension, "middle split needs even n");
  int m = ctx.m;

  std::size_t dim = 0;
  std::vector<GMatrix> upper = exterior_generators(n, m, dim);
  PfElements pf = pfaffian_elements(n, dim, upper);

  std::vector<Rational> w_plus(static_cast<std::size_t>(m), Rational(1));
  std::vector<Rational> w_minus = w_plus;
  w_minus.back() = -1;
  Rational v = pfaffian_eigenvalue(DominantWeight::validate(w_plus, n));

  auto half = [&](const Rational& eigen, std::vector<Rational> entries) {
    GMatrix proj = spectral_projector(pf.pf, dim, eigen, {Rational(-eigen)});
    SpectralBlock block = extract_block(proj, nullptr);
    DominantWeight rho = DominantWeight::validate(std::move(entries), n);
    RepRealization rep{ctx, rho, block.basis.cols(), {}, block.gram, false};
    GMatrix bt = block.basis.conj_transpose();
    rep.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        rep.upper[flat(i, j, n)] = block.gram_inverse * (bt * (upper[flat(i, j, n)] * block.basis));
    rep.unitary = (rep.gram == GMatrix::identity(rep.dim));
    rep.validate();
    return rep;
  };

  return {half(v, w_plus), half(Rational(-v), w_minus)};
}

namespace {

// Greedy dominant path from a base weight to rho: adjust entries left to
// right; every intermediate stays dominant.
std::vector<DominantWeight> build_path(const DominantWeight& rho) {
  const WeightContext& ctx = rho.context();
  std::vector<Rational> cur(static_cast<std::size_t>(ctx.m), Rational(0));
  if (rho.is_half_odd_class()) {
    for (Rational& c : cur) c = rat(1, 2);
    if (ctx.even && sgn(rho.entries().back()) < 0) cur.back() = rat(-1, 2);
  }

  std::vector<DominantWeight> path;
  path.push_back(DominantWeight::validate(cur, ctx.n));
  for (int i = 0; i < ctx.m; ++i) {
    while (cur[static_cast<std::size_t>(i)] < rho.entry(i)) {
      cur[static_cast<std::size_t>(i)] += 1;
      path.push_back(DominantWeight::validate(cur, ctx.n));
    }
    while (cur[static_cast<std::size_t>(i)] > rho.entry(i)) {
      cur[static_cast<std::size_t>(i)] -= 1;
      path.push_back(DominantWeight::validate(cur, ctx.n));
    }
  }
  return path;
}

}  // namespace

RepRealization build_rep(const DominantWeight& rho, std::size_t budget) {
  const WeightContext& ctx = rho.context();
  int n = ctx.n;

  std::vector<DominantWeight> path = build_path(rho);

  RepRealization current = [&]() -> RepRealization {
    const DominantWeight& base = path.front();
    if (!base.is_half_odd_class()) {
      RepRealization rep{ctx, base, 1, {}, GMatrix::identity(1), true};
      rep.upper.assign(static_cast<std::size_t>(n) * n, GMatrix(1, 1));
      return rep;
    }
    if (!ctx.even) return spinor_rep(n);
    auto halves = half_spin_reps(n);
    return sgn(base.entries().back()) > 0 ? std::move(halves.first) : std::move(halves.second);
  }();
  if (current.dim * static_cast<std::size_t>(n) > budget && current.rho != rho)
    fail(ErrorKind::BudgetExceeded, "base module already exceeds the budget");

  RepRealization nat = natural_rep(n);

  for (std::size_t step = 1; step < path.size(); ++step) {
    const DominantWeight& sigma = current.rho;
    const DominantWeight& target = path[step];

    std::size_t ambient_dim = current.dim * static_cast<std::size_t>(n);
    if (ambient_dim > budget)
      fail(ErrorKind::BudgetExceeded, "ambient dimension " + std::to_string(ambient_dim) +
                                          " exceeds budget " + std::to_string(budget));

    const Decomposition& dec = decompose_cached(sigma);
    int target_idx = dec.index_of(target);
    if (target_idx < 0)
      fail(ErrorKind::AmbientMissing,
           target.str() + " does not occur in " + sigma.str() + " tensor C^n");

    std::vector<GMatrix> tensor_upper(static_cast<std::size_t>(n) * n);
    GMatrix id_rep = GMatrix::identity(current.dim);
    GMatrix id_nat = GMatrix::identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        tensor_upper[flat(i, j, n)] =
            kron(current.gen(i, j), id_nat) + kron(id_rep, nat.gen(i, j));
    GMatrix c2 = casimir2_matrix(n, tensor_upper, ambient_dim);

    // Distinct Casimir values of the other components. Only the exceptional
    // pair may share a value; anything else is a diagnostic.
    Rational target_c2 = casimir2(target);
    std::vector<Rational> others;
    bool pair_collision = false;
    for (int s = 0; s < dec.count(); ++s) {
      if (s == target_idx) continue;
      Rational v = casimir2(dec.summand(s).lambda);
      if (v == target_c2) {
        bool partner = dec.exceptional && (s == dec.exceptional_pair->first ||
                                           s == dec.exceptional_pair->second);
        if (!partner)
          fail(ErrorKind::EigenvalueCollision,
               "non-exceptional Casimir collision in " + sigma.str() + " tensor C^n");
        pair_collision = true;
        continue;
      }
      if (std::find(others.begin(), others.end(), v) == others.end()) others.push_back(v);
    }

    GMatrix proj = spectral_projector(c2, ambient_dim, target_c2, others);
    if (pair_collision) {
      // the Pfaffian element of the tensor action separates the pair
      PfElements pf = pfaffian_elements(n, ambient_dim, tensor_upper);
      Rational mine = pfaffian_eigenvalue(target);
      proj = proj * spectral_projector(pf.pf, ambient_dim, mine, {Rational(-mine)});
    }

    GMatrix tensor_gram;
    const GMatrix* ambient_gram = nullptr;
    if (!current.unitary) {
      tensor_gram = kron(current.gram, id_nat);
      ambient_gram = &tensor_gram;
    }

    SpectralBlock block = extract_block(proj, ambient_gram);
    RepRealization next{ctx, target, block.basis.cols(), {}, block.gram, false};
    GMatrix bt = block.basis.conj_transpose();
    if (ambient_gram != nullptr) bt = bt * *ambient_gram;
    next.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        next.upper[flat(i, j, n)] =
            block.gram_inverse * (bt * (tensor_upper[flat(i, j, n)] * block.basis));
    next.unitary = (next.gram == GMatrix::identity(next.dim));
    next.validate();
    current = std::move(next);
  }

  return current;
}

}  // namespace weitz
