#pragma once

#include <string>
#include <vector>

#include "xxz/detlab/matrix.hpp"

namespace xxz::detlab {

/// Condensation hit a zero interior divisor; fall back to the ASM expansion
/// (small n) or, for lambda = -1, to det_exact.
class CondensationSingular : public SingularError {
 public:
  CondensationSingular(std::size_t step, std::size_t i, std::size_t j)
      : SingularError("lambda_det_dodgson: zero interior divisor at step " + std::to_string(step) + ", entry (" +
                      std::to_string(i) + "," + std::to_string(j) + ")") {}
};

/// Exact determinant.
///
/// Over a field: Gaussian elimination with fractions, pivoting on the first
/// nonzero entry of the column. Over an integral domain (BigInt):
/// Bareiss fraction-free elimination, every division exact.
template <exact::ExactRing R>
R det_exact(ExactMatrix<R> m) {
  if (!m.is_square()) throw ShapeError("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);

  bool negate = false;
  if constexpr (exact::RingTraits<R>::is_field) {
    R det(1);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && exact::is_zero(m(piv, k))) ++piv;
      if (piv == n) return R(0);
      if (piv != k) {
        m.swap_rows(piv, k);
        negate = !negate;
      }
      const R pivot = m(k, k);
      det = R(det * pivot);
      const R inv = R(R(1) / pivot);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (exact::is_zero(m(i, k))) continue;
        const R f = R(m(i, k) * inv);
        for (std::size_t j = k + 1; j < n; ++j) m(i, j) = R(m(i, j) - f * m(k, j));
      }
    }
    return negate ? R(-det) : det;
  } else {
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::size_t piv = k;
      while (piv < n && exact::is_zero(m(piv, k))) ++piv;
      if (piv == n) return R(0);
      if (piv != k) {
        m.swap_rows(piv, k);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          R t = R(m(i, j) * m(k, k) - m(i, k) * m(k, j));
          if constexpr (std::is_same_v<R, BigInt>) {
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          } else {
            t = R(t / prev);
          }
          m(i, j) = std::move(t);
        }
        m(i, k) = R(0);
      }
      prev = m(k, k);
    }
    const R& d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
  }
}

/// The lambda-determinant via Dodgson condensation.
///
/// X^(1) = m, Y^(1) = all ones;
///   x^(k)_ij = (x^(k-1)_ij x^(k-1)_{i+1,j+1} + lambda x^(k-1)_{i+1,j} x^(k-1)_{i,j+1}) / y^(k-1)_ij
///   y^(k)_ij = x^(k-1)_{i+1,j+1}
/// The result is the single entry of X^(n). lambda = -1 gives the ordinary determinant.
template <exact::ExactField R>
R lambda_det_dodgson(const ExactMatrix<R>& m, const R& lambda) {
  if (!m.is_square()) throw ShapeError("lambda_det_dodgson: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);

  ExactMatrix<R> x = m;
  ExactMatrix<R> y(n > 1 ? n - 1 : 0, n > 1 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) y(i, j) = R(1);

  for (std::size_t size = n; size > 1; --size) {
    const std::size_t next = size - 1;
    ExactMatrix<R> nx(next, next);
    for (std::size_t i = 0; i < next; ++i) {
      for (std::size_t j = 0; j < next; ++j) {
        const R& div = y(i, j);
        if (exact::is_zero(div)) throw CondensationSingular(n - size + 1, i, j);
        nx(i, j) = R((x(i, j) * x(i + 1, j + 1) + lambda * x(i + 1, j) * x(i, j + 1)) / div);
      }
    }
    ExactMatrix<R> ny(next > 0 ? next - 1 : 0, next > 0 ? next - 1 : 0);
    for (std::size_t i = 0; i + 1 < next; ++i)
      for (std::size_t j = 0; j + 1 < next; ++j) ny(i, j) = x(i + 1, j + 1);
    x = std::move(nx);
    y = std::move(ny);
  }
  return x(0, 0);
}

}  // namespace xxz::detlab
