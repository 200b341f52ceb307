#include "xxz/conj/conjectures.hpp"

#include "xxz/asmnum/asm_numbers.hpp"
#include "xxz/detlab/determinant.hpp"
#include "xxz/detlab/matrix.hpp"
#include "xxz/errors.hpp"
#include "xxz/numeric/bethe.hpp"

namespace xxz::conj {
namespace {

BigRat e_at(const std::vector<BigRat>& e, long k) {
  if (k < 0 || k >= static_cast<long>(e.size())) return BigRat(0);
  return e[static_cast<std::size_t>(k)];
}

void require_n(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n >= 1 required");
}

BigFloat relative_gap(const BigComplex& lhs, const BigComplex& rhs) {
  const BigFloat scale = rhs.abs();
  return scale.is_zero() ? (lhs - rhs).abs() : (lhs - rhs).abs() / scale;
}

VerificationReport numeric_report(std::string id, int n, const BigComplex& lhs, const BigRat& rhs, long precision) {
  VerificationReport r;
  r.conjecture = std::move(id);
  r.n = n;
  r.method = Method::kNumeric;
  r.lhs = lhs;
  r.rhs = rhs;
  r.precision_bits = precision;
  r.tolerance = BigFloat::exp2(40 - precision, precision);
  r.equal = relative_gap(lhs, BigComplex(rhs, precision)) <= *r.tolerance;
  return r;
}

}  // namespace

BigRat staircase_det(const std::vector<BigRat>& evalues, int n) {
  require_n(n, "staircase_det");
  const std::size_t size = 2 * static_cast<std::size_t>(n - 1);
  ExactMatrix<BigRat> m(size, size);
  for (std::size_t i = 1; i <= size; ++i)
    for (std::size_t j = 1; j <= size; ++j) {
      const long k = n - static_cast<long>((i + 1) / 2) - static_cast<long>(i) + static_cast<long>(j);
      m(i - 1, j - 1) = e_at(evalues, k);
    }
  return detlab::det_exact(std::move(m));
}

BigRat periodic_prefactor(int n) {
  require_n(n, "periodic_prefactor");
  // the sqrt(3) power n(n-1) is always even
  if ((static_cast<long>(n) * (n - 1)) % 2 != 0) throw ExactnessError("periodic_prefactor: odd power of sqrt(3)");
  BigRat inner(1);
  for (int j = 1; j <= n; ++j) inner *= BigRat(1, 4) * exact::pow(BigRat(3 * j - 1, 2 * j - 1), 2);
  return exact::pow(BigRat(3), static_cast<long>(n) * (n - 1) / 2) * exact::pow(inner, n - 1);
}

BigRat twisted_prefactor(int n) {
  require_n(n, "twisted_prefactor");
  if ((static_cast<long>(n - 1) * (n - 2)) % 2 != 0) throw ExactnessError("twisted_prefactor: odd power of sqrt(3)");
  BigRat c(1);
  for (int j = 1; j <= n; ++j) c *= exact::pow(BigRat(3 * j - 1, n + j), 2);
  return exact::pow(BigRat(4) * c, n - 1) * exact::pow(BigRat(3), static_cast<long>(n - 1) * (n - 2) / 2);
}

VerificationReport verify_periodic_product(int n) {
  require_n(n, "verify_periodic_product");
  const BigRat pre = periodic_prefactor(n);
  const BigRat schur = staircase_det(qfunc::elem_periodic(n).evalues, n);
  const BigRat lhs = pre * schur;
  const BigInt a = asmnum::asm_count(n);
  const BigRat rhs(BigInt(a * a * a));
  VerificationReport r;
  r.conjecture = "conj";
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.equal = lhs == rhs;
  r.details = {{"prefactor", pre}, {"schur", schur}};
  return r;
}

VerificationReport verify_twisted_product(int n) {
  require_n(n, "verify_twisted_product");
  const BigRat pre = twisted_prefactor(n);
  const BigRat schur = staircase_det(qfunc::elem_twisted(n).evalues, n);
  const CycloQ phase = exact::cyclo_pow(CycloQ::q_inv(), n - 1);
  const CycloQ lhs = phase * CycloQ(pre * schur);
  const CycloQ rhs = phase * CycloQ(BigRat(BigInt(asmnum::asm_count(n) * asmnum::asm_ht(2 * n - 1))));
  VerificationReport r;
  r.conjecture = "conj1";
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.equal = lhs == rhs;
  r.details = {{"prefactor", pre}, {"schur", schur}, {"phase", phase}};
  return r;
}

VerificationReport verify_reflecting_product(int n, long precision) {
  require_n(n, "verify_reflecting_product");
  if (precision < 128) throw DomainError("verify_reflecting_product: precision >= 128 required");
  const RootSet rs = numeric::solve_roots(qfunc::elem_reflecting(n), precision);
  const BigInt v = asmnum::asm_v(2 * n + 1), m = asmnum::n8(2 * n);
  const BigRat rhs(BigInt(v * v * m * m * m * m));
  VerificationReport r = numeric_report("conj2", n, numeric::reflecting_double_product(rs), rhs, precision);
  r.details = {{"bethe_residual", BigComplex(rs.residual)}};
  return r;
}

std::vector<VerificationReport> verify_component_sums(int n, long precision) {
  require_n(n, "verify_component_sums");
  if (precision < 128) throw DomainError("verify_component_sums: precision >= 128 required");
  const RootSet rs = numeric::solve_roots(qfunc::elem_periodic(n), precision);
  const BigInt a = asmnum::asm_count(n);
  return {numeric_report("sums_small", n, numeric::component_sum_small(rs), BigRat(a), precision),
          numeric_report("sums_large", n, numeric::component_sum_large(rs), BigRat(BigInt(a * a)), precision)};
}

VerificationReport verify_recursion(int n) {
  VerificationReport r;
  r.conjecture = "recursion";
  r.n = n;
  const bool ok = qfunc::check_recursion_periodic(n);
  r.lhs = BigRat(ok ? 1 : 0);
  r.rhs = BigRat(1);
  r.equal = ok;
  return r;
}

VerificationReport verify_hyp(qfunc::HypIdentity which, int n, exact::BinomialConvention convention) {
  VerificationReport r;
  r.conjecture = std::string(qfunc::to_string(which)) + " (" + std::string(exact::to_string(convention)) + ")";
  r.n = n;
  long failures = 0;
  for (int s = 0; s <= 3 * n; ++s) {
    const auto c = qfunc::verify_hyp_identity(which, n, s, convention);
    if (!c.holds()) {
      ++failures;
      r.details.emplace_back("s=" + std::to_string(s), c.lhs - c.rhs);
    }
  }
  r.lhs = BigRat(failures);
  r.rhs = BigRat(0);
  r.equal = failures == 0;
  return r;
}

}  // namespace xxz::conj
