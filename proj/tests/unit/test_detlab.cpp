#include <random>
#include <set>

#include "doctest.h"
#include "xxz/detlab/asm.hpp"
#include "xxz/detlab/determinant.hpp"

using namespace xxz;
using namespace xxz::detlab;

namespace {

ExactMatrix<BigRat> random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  ExactMatrix<BigRat> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = BigRat(sign(rng) ? num(rng) : -num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("exact determinants") {
  CHECK(det_exact(ExactMatrix<BigRat>::identity(3)) == 1);
  CHECK(det_exact(ExactMatrix<BigRat>{{BigRat(1), BigRat(11, 5)}, {BigRat(1), BigRat(1)}}) == BigRat(-6, 5));
  CHECK(det_exact(ExactMatrix<BigRat>{{BigRat(11, 5), BigRat(1)}, {BigRat(1), BigRat(11, 5)}}) == BigRat(96, 25));
  CHECK(det_exact(ExactMatrix<BigInt>{{BigInt(2), BigInt(3)}, {BigInt(5), BigInt(7)}}) == -1);
  CHECK(det_exact(ExactMatrix<BigInt>{{BigInt(0), BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4), BigInt(5)},
                                      {BigInt(6), BigInt(7), BigInt(9)}}) == -3);
  CHECK_THROWS_AS(det_exact(ExactMatrix<BigRat>(2, 3)), ShapeError);
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(rng, 3), b = random_matrix(rng, 3);
    CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
  }
}

TEST_CASE("lambda determinant") {
  const BigRat a(2), b(3), c(5), d(7), lam(4);
  CHECK(lambda_det_dodgson(ExactMatrix<BigRat>{{a, b}, {c, d}}, lam) == a * d + lam * b * c);
  CHECK(lambda_det_asm_sum(ExactMatrix<BigRat>{{a, b}, {c, d}}, lam) == a * d + lam * b * c);

  ExactMatrix<BigRat> ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
  CHECK(lambda_det_asm_sum(ones, BigRat(1)) == 8);

  // (w_i^{n-j}) gives prod_{i<j} (w_i + lambda w_j); the transposed, row-reversed
  // matrix (w_j^{i-1}) gives prod_{i<j} (w_j + lambda w_i) instead.
  const std::vector<BigRat> w{BigRat(2), BigRat(3), BigRat(5)};
  ExactMatrix<BigRat> v(3, 3), vt(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      v(i, j) = exact::ipow(w[i], static_cast<unsigned long>(2 - j));
      vt(i, j) = exact::ipow(w[j], static_cast<unsigned long>(i));
    }
  for (long l : {-1L, 2L, 7L}) {
    const BigRat L(l);
    CHECK(lambda_det_dodgson(v, L) == (BigRat(2) + L * 3) * (BigRat(2) + L * 5) * (BigRat(3) + L * 5));
    CHECK(lambda_det_dodgson(vt, L) == (BigRat(3) + L * 2) * (BigRat(5) + L * 2) * (BigRat(5) + L * 3));
  }

  std::mt19937 rng(9);
  int compared = 0;
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 4);
    BigRat d_minus, d_five;
    try {
      d_minus = lambda_det_dodgson(m, BigRat(-1));
      d_five = lambda_det_dodgson(m, BigRat(5));
    } catch (const CondensationSingular&) {
      continue;
    }
    ++compared;
    CHECK(d_minus == det_exact(m));
    CHECK(d_five == lambda_det_asm_sum(m, BigRat(5)));
  }
  CHECK(compared >= 10);
  CHECK_THROWS_AS(lambda_det_asm_sum(ones, BigRat(0)), DomainError);
  ExactMatrix<BigRat> zero_mid = ones;
  zero_mid(1, 1) = 0;
  CHECK_THROWS_AS(lambda_det_asm_sum(zero_mid, BigRat(2)), DomainError);
  ExactMatrix<BigRat> sing{{BigRat(1), BigRat(2), BigRat(3)}, {BigRat(4), BigRat(0), BigRat(6)}, {BigRat(7), BigRat(8), BigRat(9)}};
  CHECK_THROWS_AS(lambda_det_dodgson(sing, BigRat(2)), CondensationSingular);
}

TEST_CASE("ASM enumeration") {
  const std::size_t expected[] = {1, 1, 2, 7, 42, 429, 7436};
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = asm_enumerate(n);
    CHECK(all.size() == expected[n]);
    std::set<std::vector<std::int8_t>> uniq;
    for (const auto& a : all) uniq.insert(a.entries());
    CHECK(uniq.size() == all.size());
  }
  const auto three = asm_enumerate(3);
  long with_neg = 0;
  for (const auto& a : three) with_neg += a.num_neg();
  CHECK(with_neg == 1);
  CHECK_THROWS_AS(asm_enumerate(7), SizeError);
  CHECK_THROWS_AS(AsmMatrix(2, {1, 1, 0, 0}), std::invalid_argument);
  CHECK(AsmMatrix(2, {0, 1, 1, 0}).inversion_number() == 1);
  CHECK(AsmMatrix(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}).inversion_number() == 2);
}
