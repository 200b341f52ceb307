#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xxz/exact/cyclo.hpp"
#include "xxz/exact/rational.hpp"
#include "xxz/numeric/bigfloat.hpp"
#include "xxz/qfunc/qfunctions.hpp"

namespace xxz {

using ReportValue = std::variant<BigRat, CycloQ, BigComplex>;

enum class Method { kExact, kNumeric };

struct VerificationReport {
  std::string conjecture;
  int n = 0;
  Method method = Method::kExact;
  ReportValue lhs;
  ReportValue rhs;
  bool equal = false;
  std::optional<long> precision_bits;
  /// Relative tolerance for numeric reports.
  std::optional<BigFloat> tolerance;
  /// Named intermediate values (prefactor, Schur value, ...).
  std::vector<std::pair<std::string, ReportValue>> details;
};

namespace conj {

/// det(e_{n - floor((i+1)/2) - i + j}), 1 <= i, j <= 2(n-1): the Schur function
/// of the staircase (2(n-1), ..., 2, 0) in terms of the e-values.
BigRat staircase_det(const std::vector<BigRat>& evalues, int n);

/// 3^{n(n-1)/2} prod_j ((3j-1)/(2j-1))^{2(n-1)} / 4^{n(n-1)}.
BigRat periodic_prefactor(int n);
/// (4 prod_j ((3j-1)/(n+j))^2)^{n-1} 3^{(n-1)(n-2)/2}, without the phase q^{-(n-1)}.
BigRat twisted_prefactor(int n);

/// prefactor * s_staircase(elem_periodic(n)) against A_n^3. Requires n >= 1.
VerificationReport verify_periodic_product(int n);
/// q^{-(n-1)} prefactor * s_staircase(elem_twisted(n)) against q^{-(n-1)} A_n A_HT(2n-1), in Q(q).
VerificationReport verify_twisted_product(int n);
/// Reflecting double product at numeric roots against A_V(2n+1)^2 N_8(2n)^4,
/// relative tolerance 2^{40 - precision}. Requires precision >= 128.
VerificationReport verify_reflecting_product(int n, long precision);
/// The two permutation sums at the periodic roots against A_n and A_n^2
/// (reports "sums_small" and "sums_large"), relative tolerance 2^{40 - precision}.
std::vector<VerificationReport> verify_component_sums(int n, long precision);

/// Three-term recursion as an exact polynomial identity; lhs and rhs are 1/0 flags.
VerificationReport verify_recursion(int n);
/// The identity for every 0 <= s <= 3n; lhs counts the failing s, rhs is 0.
/// Failing s values are listed in details.
VerificationReport verify_hyp(qfunc::HypIdentity which, int n, exact::BinomialConvention convention);

}  // namespace conj
}  // namespace xxz
