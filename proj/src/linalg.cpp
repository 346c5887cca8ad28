#include "weitz/linalg.hpp"

namespace weitz {

GMatrix orthogonalize_columns(const GMatrix& basis, const GMatrix* gram) {
  GMatrix b = basis;
  std::size_t cols = b.cols();
  std::vector<Rational> norms(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (sgn(norms[k]) == 0) continue;
      Gaussian proj = pair_with_gram(b, b, gram, k, j);
      if (proj.is_zero()) continue;
      proj /= Gaussian(norms[k]);
      for (std::size_t i = 0; i < b.rows(); ++i) {
        Gaussian t = proj;
        t *= b(i, k);
        b(i, j) -= t;
      }
    }
    Gaussian n2 = pair_with_gram(b, b, gram, j, j);
    // Hermitian positive form: the diagonal is real.
    norms[j] = n2.re;
  }
  return b;
}

GMatrix induced_gram(const GMatrix& basis, const GMatrix* gram) {
  std::size_t cols = basis.cols();
  GMatrix g(cols, cols);
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t c = 0; c < cols; ++c) g(a, c) = pair_with_gram(basis, basis, gram, a, c);
  return g;
}

bool is_self_adjoint(const GMatrix& m, const GMatrix& gram) {
  GMatrix lhs = m.conj_transpose() * gram;
  GMatrix rhs = gram * m;
  return lhs == rhs;
}

}  // namespace weitz
