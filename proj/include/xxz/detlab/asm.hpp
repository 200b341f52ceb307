#pragma once

#include <cstdint>
#include <vector>

#include "xxz/detlab/matrix.hpp"
#include "xxz/exact/ring.hpp"

namespace xxz::detlab {

/// An n x n alternating sign matrix with its inversion number and count of -1 entries.
class AsmMatrix {
 public:
  /// Validates the alternating-sign property; throws std::invalid_argument otherwise.
  AsmMatrix(std::size_t n, std::vector<std::int8_t> entries);

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  /// I(A) = sum over i < k, j > l of a_ij a_kl. Equals the inversion count on permutation matrices.
  long inversion_number() const { return inversion_number_; }
  long num_neg() const { return num_neg_; }

  bool is_half_turn_symmetric() const;
  bool is_vertically_symmetric() const;

  /// True iff every row and column sums to 1 with nonzero entries alternating in sign, starting with +1.
  static bool is_alternating(std::size_t n, const std::vector<std::int8_t>& entries);

  friend bool operator==(const AsmMatrix& a, const AsmMatrix& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const AsmMatrix& a, const AsmMatrix& b) { return a.entries_ < b.entries_; }

 private:
  std::size_t n_;
  std::vector<std::int8_t> entries_;
  long inversion_number_ = 0;
  long num_neg_ = 0;
};

inline constexpr std::size_t kMaxAsmOrder = 6;

/// Every n x n ASM, n <= kMaxAsmOrder, built row by row from monotone-triangle interlacing.
std::vector<AsmMatrix> asm_enumerate(std::size_t n);

/// det_lambda M = sum_{A in ASM_n} lambda^I(A) (1 + 1/lambda)^N(A) prod m_ij^{a_ij}.
template <exact::ExactField R>
R lambda_det_asm_sum(const ExactMatrix<R>& m, const R& lambda) {
  if (!m.is_square()) throw ShapeError("lambda_det_asm_sum: matrix is not square");
  if (exact::is_zero(lambda)) throw DomainError("lambda_det_asm_sum: lambda = 0");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  const R one_plus_inv = R(R(1) + R(1) / lambda);

  R total(0);
  for (const auto& a : asm_enumerate(n)) {
    R term = R(exact::ipow(lambda, static_cast<unsigned long>(a.inversion_number())) *
               exact::ipow(one_plus_inv, static_cast<unsigned long>(a.num_neg())));
    for (std::size_t i = 0; i < n && !exact::is_zero(term); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int e = a(i, j);
        if (e == 1) {
          term = R(term * m(i, j));
        } else if (e == -1) {
          if (exact::is_zero(m(i, j))) throw DomainError("lambda_det_asm_sum: zero entry raised to the power -1");
          term = R(term / m(i, j));
        }
      }
    }
    total = R(total + term);
  }
  return total;
}

}  // namespace xxz::detlab
