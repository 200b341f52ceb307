#include "doctest.h"
#include "xxz/conj/conjectures.hpp"
#include "xxz/numeric/bethe.hpp"
#include "xxz/symfunc/partition.hpp"
#include "xxz/symfunc/symfunc.hpp"

using namespace xxz;
using namespace xxz::conj;

namespace {

const BigRat& rat(const ReportValue& v) { return std::get<BigRat>(v); }
const CycloQ& cyc(const ReportValue& v) { return std::get<CycloQ>(v); }
const BigRat& detail(const VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return std::get<BigRat>(v);
  throw std::out_of_range(key);
}

}  // namespace

TEST_CASE("staircase determinant is the Nagelsbach-Kostka Schur value") {
  for (int n = 1; n <= 6; ++n) {
    const auto e = qfunc::elem_periodic(n).evalues;
    const SymTable<BigRat> t(SymKind::kElementary, static_cast<std::size_t>(n), e);
    CHECK(staircase_det(e, n) == symfunc::schur_nk(symfunc::double_staircase(n), t));
  }
}

TEST_CASE("periodic product") {
  const long cubes[] = {0, 1, 8, 343, 74088};
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_periodic_product(n);
    CHECK(r.equal);
    CHECK(rat(r.lhs) == cubes[n]);
    CHECK(r.method == Method::kExact);
  }
  const auto r2 = verify_periodic_product(2);
  CHECK(detail(r2, "prefactor") == BigRat(25, 12));
  CHECK(detail(r2, "schur") == BigRat(96, 25));
}

TEST_CASE("twisted product") {
  CHECK(cyc(verify_twisted_product(1).lhs) == CycloQ(1));
  const auto r2 = verify_twisted_product(2);
  CHECK(r2.equal);
  CHECK(cyc(r2.lhs) == CycloQ(6) * CycloQ::q_inv());
  const auto r3 = verify_twisted_product(3);
  CHECK(r3.equal);
  CHECK(cyc(r3.lhs) == CycloQ(175) * CycloQ::q_inv() * CycloQ::q_inv());
}

TEST_CASE("exact products against numeric roots") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const RootSet p = numeric::solve_roots(qfunc::elem_periodic(n), 256);
    const BigRat schur = staircase_det(qfunc::elem_periodic(n).evalues, n);
    CHECK((numeric::staircase_schur_numeric(p) - BigComplex(schur, 256)).abs().to_double() < 1e-25);
    CHECK((numeric::double_product(p) - BigComplex(rat(verify_periodic_product(n).lhs), 256)).abs().to_double() < 1e-25);

    const RootSet t = numeric::solve_roots(qfunc::elem_twisted(n), 256);
    const BigComplex lhs(cyc(verify_twisted_product(n).lhs), 256);
    CHECK((numeric::double_product(t) - lhs).abs().to_double() < 1e-25);
  }
}

TEST_CASE("reflecting product") {
  const long want[] = {0, 1, 144, 9897316};
  for (int n = 1; n <= 3; ++n) {
    const auto r = verify_reflecting_product(n, 256);
    CHECK(r.equal);
    CHECK(rat(r.rhs) == want[n]);
    CHECK(r.precision_bits == 256);
  }
  CHECK_THROWS_AS(verify_reflecting_product(2, 64), DomainError);
}

TEST_CASE("index exclusion matches value exclusion") {
  for (int n = 1; n <= 3; ++n) {
    const RootSet rs = numeric::solve_roots(qfunc::elem_reflecting(n), 256);
    std::vector<BigComplex> z;
    for (const auto& w : rs.w) z.push_back(numeric::to_z(w));
    BigComplex prod(1L, 256);
    const BigFloat eps = BigFloat::exp2(-200, 256);
    for (const auto& zi : z)
      for (const auto& zj : z) {
        if ((zi - zj).abs() < eps || (zi * zj - BigComplex(1L, 256)).abs() < eps) continue;
        prod *= BigComplex(1L, 256) + zi + zi * zj;
      }
    CHECK((prod - numeric::reflecting_double_product(rs)).abs().to_double() < 1e-40);
  }
}

TEST_CASE("component sums") {
  for (int n = 1; n <= 4; ++n) {
    const auto rs = verify_component_sums(n, 256);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].equal);
    CHECK(rs[1].equal);
  }
}

TEST_CASE("recursion and hypergeometric identities") {
  CHECK(verify_recursion(3).equal);
  CHECK(verify_hyp(qfunc::HypIdentity::kHyp1, 4, exact::BinomialConvention::kFallingFactorial).equal);
  const auto bad = verify_hyp(qfunc::HypIdentity::kHyp2AsPrinted, 2, exact::BinomialConvention::kFallingFactorial);
  CHECK_FALSE(bad.equal);
  CHECK(!bad.details.empty());
}
