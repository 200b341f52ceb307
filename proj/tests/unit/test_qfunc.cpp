#include <random>

#include "doctest.h"
#include "xxz/qfunc/qfunctions.hpp"

using namespace xxz;
using namespace xxz::qfunc;
using exact::BinomialConvention;

namespace {

std::vector<BigRat> rv(std::initializer_list<BigRat> v) { return v; }

BigRat random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 13);
  for (;;) {
    BigRat w(num(rng), den(rng));
    if (w != 0 && w != 1 && w != -1) return w;
  }
}

}  // namespace

TEST_CASE("closed-form e-values") {
  CHECK(elem_periodic(0).evalues == rv({1}));
  CHECK(elem_periodic(1).evalues == rv({1, 1}));
  CHECK(elem_periodic(2).evalues == rv({1, BigRat(11, 5), 1}));
  CHECK(elem_periodic(3).evalues == rv({1, BigRat(7, 2), BigRat(7, 2), 1}));
  CHECK(elem_periodic(4).evalues == rv({1, BigRat(107, 22), BigRat(171, 22), BigRat(107, 22), 1}));
  CHECK(elem_twisted(1).evalues == rv({1, BigRat(1, 2)}));
  CHECK(elem_twisted(2).evalues == rv({1, BigRat(8, 5), BigRat(2, 5)}));
  CHECK(elem_twisted(3).evalues == rv({1, BigRat(57, 20), BigRat(21, 10), BigRat(7, 20)}));
  CHECK(elem_reflecting(1).evalues == rv({1, 4}));
  CHECK(elem_reflecting(2).evalues == rv({1, 8, 13}));
  CHECK(elem_reflecting(3).evalues == rv({1, 12, BigRat(1041, 26), BigRat(526, 13)}));
  for (int n = 0; n <= 30; ++n) {
    const auto e = elem_periodic(n).evalues;
    CHECK(e.front() == 1);
    CHECK(e.back() == 1);
  }
  CHECK(elem_periodic(3).chain_length() == 7);
  CHECK(elem_twisted(3).chain_length() == 6);
  CHECK(elem_periodic(2).poly() == UniPoly<BigRat>{BigRat(1), BigRat(-11, 5), BigRat(1)});
}

TEST_CASE("polynomial form equals the rational form") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 12; ++n) {
    const auto pp = elem_periodic(n).poly();
    const auto pt = elem_twisted(n).poly();
    const auto pr = elem_reflecting(n).poly();
    for (int t = 0; t < 20; ++t) {
      const BigRat w = random_point(rng);
      CHECK(pp.eval(w) == q_rational_eval(Boundary::kPeriodic, n, w));
      CHECK(pt.eval(w) == q_rational_eval(Boundary::kTwisted, n, w));
      CHECK(pr.eval(BigRat(w + 1 / w)) == q_rational_eval(Boundary::kReflecting, n, w));
    }
  }
  CHECK(q_rational_eval(Boundary::kPeriodic, 1, BigRat(0)) == -1);
  CHECK(q_rational_eval(Boundary::kPeriodic, 2, BigRat(2)) == BigRat(3, 5));
  CHECK_THROWS_AS(q_rational_eval(Boundary::kPeriodic, 2, BigRat(-1)), DomainError);
  CHECK_THROWS_AS(q_rational_eval(Boundary::kReflecting, 2, BigRat(1)), DomainError);
  CHECK_THROWS_AS(q_rational_eval(Boundary::kReflecting, 2, BigRat(0)), DomainError);
}

TEST_CASE("printed readings of the reflecting triple sum") {
  for (int n = 2; n <= 8; ++n) {
    const auto good = reflecting_triple_sum(n, ReflectingReading::kCorrected);
    CHECK(good == elem_reflecting(n).evalues);
    CHECK(reflecting_triple_sum(n, ReflectingReading::kPrintedFloor) != good);
    CHECK(reflecting_triple_sum(n, ReflectingReading::kPrintedSameBracket) != good);
  }
}

TEST_CASE("three-term recursion") {
  CHECK(recursion_next(1) == UniPoly<BigRat>{BigRat(1), BigRat(-11, 5), BigRat(1)});
  for (int n = 1; n <= 20; ++n) CHECK(check_recursion_periodic(n));
}

TEST_CASE("special values") {
  for (int n = 0; n <= 20; ++n) {
    const auto sv = special_values_periodic(n);
    CHECK(sv.ok());
  }
  CHECK(special_values_periodic(1).q2n_expected == 1);
  CHECK(special_values_periodic(1).corollary_expected == 3);
}

TEST_CASE("hypergeometric identities") {
  const auto ff = BinomialConvention::kFallingFactorial;
  const auto tr = BinomialConvention::kTruncating;
  CHECK(verify_hyp_identity(HypIdentity::kHyp1, 0, 0, tr).holds());
  for (int n = 0; n <= 10; ++n) {
    for (int s = 0; s <= 3 * n; ++s) {
      CHECK(verify_hyp_identity(HypIdentity::kHyp1, n, s, ff).holds());
      CHECK(verify_hyp_identity(HypIdentity::kHyp2, n, s, ff).holds());
      CHECK(verify_hyp_identity(HypIdentity::kHyp1, n, s, tr).holds() == (n == 0 || s > n));
      if (s >= n) CHECK(verify_hyp_identity(HypIdentity::kHyp2, n, s, tr).holds());
    }
  }
  const auto printed = verify_hyp_identity(HypIdentity::kHyp2AsPrinted, 0, 0, ff);
  CHECK(printed.lhs == 1);
  CHECK(printed.rhs == 0);
}

TEST_CASE("Chebyshev-type expansion") {
  CHECK(chebyshev_expand(0) == UniPoly<BigRat>{BigRat(1)});
  CHECK(chebyshev_expand(1) == UniPoly<BigRat>{BigRat(0), BigRat(1)});
  CHECK(chebyshev_expand(2) == UniPoly<BigRat>{BigRat(-1), BigRat(0), BigRat(1)});
  std::mt19937 rng(23);
  for (int n = 0; n <= 12; ++n) {
    const BigRat w = random_point(rng);
    const BigRat rhs = (exact::pow(w, n + 1) - exact::pow(w, -n - 1)) / (w - 1 / w);
    CHECK(chebyshev_expand(n).eval(BigRat(w + 1 / w)) == rhs);
  }
}

TEST_CASE("expansion of (1+w)^{-2n-1} in inverse powers") {
  // with u = 1/w the claim is (1+u)^{2n+1} sum_{m<=30} (-1)^m binom(2n+m, m) u^m = 1 + O(u^31)
  for (int n = 0; n <= 5; ++n) {
    std::vector<BigRat> c;
    for (int m = 0; m <= 30; ++m) {
      BigRat v = exact::gen_binom(BigRat(2 * n + m), m);
      c.push_back(m % 2 ? BigRat(-v) : v);
    }
    const auto prod = UniPoly<BigRat>(c) * UniPoly<BigRat>{BigRat(1), BigRat(1)}.pow(static_cast<unsigned>(2 * n + 1));
    CHECK(prod.coeff(0) == 1);
    for (std::size_t k = 1; k <= 30; ++k) CHECK(prod.coeff(k) == 0);
  }
}
