#include <random>

#include "doctest.h"
#include "xxz/errors.hpp"
#include "xxz/exact/cyclo.hpp"
#include "xxz/exact/poly.hpp"
#include "xxz/exact/rational.hpp"

using namespace xxz;
using exact::gen_binom;

TEST_CASE("gen_binom conventions") {
  CHECK(gen_binom(BigRat(7, 3), 0) == 1);
  CHECK(gen_binom(BigRat(-4), 0) == 1);
  CHECK(gen_binom(BigRat(5, 3), 2) == BigRat(5, 9));
  CHECK(gen_binom(BigRat(-1), 1) == 0);
  CHECK(gen_binom(BigRat(2, 3), 1) == BigRat(2, 3));
  CHECK(gen_binom(BigRat(3), 5) == 0);
  CHECK(gen_binom(BigRat(10), 3) == 120);
  CHECK(gen_binom(BigRat(4), -1) == 0);
  CHECK(exact::binom(BigRat(-1), 1, exact::BinomialConvention::kFallingFactorial) == -1);
  CHECK(exact::binom(BigRat(-2), 3, exact::BinomialConvention::kFallingFactorial) == -4);
}

TEST_CASE("gen_binom against the falling product for thirds") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40);
  for (int t = 0; t < 200; ++t) {
    int p = num(rng);
    if (p % 3 == 0) ++p;
    const BigRat a(p, 3);
    for (long k = 0; k <= 12; ++k) {
      BigRat prod = 1;
      for (long j = 0; j < k; ++j) prod *= a - j;
      CHECK(gen_binom(a, k) * BigRat(exact::factorial(static_cast<unsigned long>(k))) / prod == 1);
    }
  }
}

TEST_CASE("rational text round trip") {
  CHECK(exact::to_string(BigRat(11, 5)) == "11/5");
  CHECK(exact::to_string(BigRat(-4)) == "-4");
  CHECK(exact::parse_rat(" -22/10 ") == BigRat(-11, 5));
  CHECK_THROWS_AS(exact::parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("CycloQ field arithmetic") {
  const CycloQ q = CycloQ::q();
  CHECK(q * q == CycloQ(BigRat(-1), BigRat(1)));
  CHECK(exact::cyclo_inv(q) == CycloQ(BigRat(1), BigRat(-1)));
  CHECK(exact::cyclo_pow(q, 6) == CycloQ(1));
  CHECK(exact::cyclo_pow(q, 3) == CycloQ(-1));
  CHECK(exact::cyclo_pow(q, -1) == CycloQ::q_inv());
  CHECK(q + CycloQ::q_inv() == CycloQ(1));
  CHECK_THROWS_AS(exact::cyclo_inv(CycloQ(0)), DomainError);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-30, 30), den(1, 9);
  auto rnd = [&] { return CycloQ(BigRat(d(rng), den(rng)), BigRat(d(rng), den(rng))); };
  for (int t = 0; t < 200; ++t) {
    const CycloQ x = rnd(), y = rnd();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x * x.conj()).is_rational());
    CHECK((x * x.conj()).a() == x.norm());
    if (!x.is_zero()) CHECK(x * x.inv() == CycloQ(1));
  }
}

TEST_CASE("polynomial exact division") {
  using P = UniPoly<BigRat>;
  const P num{BigRat(5), BigRat(-1), BigRat(-12), BigRat(-1), BigRat(5)};
  const P den{BigRat(5), BigRat(10), BigRat(5)};
  CHECK(exact::poly_div_exact(num, den) == P{BigRat(1), BigRat(-11, 5), BigRat(1)});
  CHECK(exact::poly_div_exact(num, P{BigRat(1)}) == num);
  CHECK(exact::poly_div_exact(P{BigRat(-1), BigRat(0), BigRat(1)}, P{BigRat(1), BigRat(1)}) == P{BigRat(-1), BigRat(1)});
  CHECK_THROWS_AS(exact::poly_div_exact(P{BigRat(1), BigRat(0), BigRat(1)}, P{BigRat(1), BigRat(1)}), ExactnessError);
  CHECK(P{}.degree() == P::kZeroDegree);
  CHECK(P{BigRat(0), BigRat(0)}.is_zero());

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9), deg(0, 5);
  auto rnd = [&] {
    std::vector<BigRat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = BigRat(d(rng), 1 + std::abs(d(rng)));
    c.back() = c.back() == 0 ? BigRat(1) : c.back();
    return P(c);
  };
  for (int t = 0; t < 100; ++t) {
    const P a = rnd(), b = rnd();
    CHECK(exact::poly_div_exact(a * b, b) * b == a * b);
  }
}

TEST_CASE("polynomial evaluation in Q(q)") {
  const UniPoly<BigRat> p{BigRat(1), BigRat(-1), BigRat(1)};  // w^2 - w + 1 vanishes at q
  CHECK(p.eval(CycloQ::q()).is_zero());
}
