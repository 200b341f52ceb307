#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/exact/cyclo.hpp"
#include "xxz/exact/poly.hpp"
#include "xxz/exact/rational.hpp"

namespace xxz {

/// Boundary condition of the chain. Twisted means twist angle pi/3.
enum class Boundary { kPeriodic, kTwisted, kReflecting };

std::string_view to_string(Boundary b);
/// "periodic" | "twisted" | "reflecting" (also "open"); std::invalid_argument otherwise.
Boundary parse_boundary(std::string_view text);

/// Groundstate Q-function Q_n = sum_l (-1)^l x^{n-l} e_l.
///
/// x is w for periodic and twisted chains and w~ = w + 1/w for the
/// reflecting chain, in which case evalues are e_l(w~_1, ..., w~_n).
struct QPolynomial {
  Boundary boundary;
  int n;
  std::vector<BigRat> evalues;

  UniPoly<BigRat> poly() const;
  /// Chain length the roots belong to: 2n+1 periodic, 2n twisted and reflecting.
  int chain_length() const;
};

namespace qfunc {

/// Periodic chain, L = 2n+1.
QPolynomial elem_periodic(int n);
/// Twisted chain, L = 2n.
QPolynomial elem_twisted(int n);
/// Reflecting chain, L = 2n; e-values in the w~ variables.
QPolynomial elem_reflecting(int n);
QPolynomial elem_values(Boundary b, int n);

/// Readings of the printed triple sum for the reflecting e-values.
enum class ReflectingReading {
  /// Products binom(2n+2/3, n-+k) binom(2n-2/3, n+-k), k = 0 term binom(2n+2/3,n) binom(2n-2/3,n),
  /// m summed to n-p, brackets [(3k+m+1)/2] and [(3k+m-1)/2] as floors.
  kCorrected,
  /// As printed: both factors with top 2n+2/3, m summed to p, floor brackets.
  kPrintedFloor,
  /// As printed, but both brackets read as [(3k+m+1)/2].
  kPrintedSameBracket,
};
std::vector<BigRat> reflecting_triple_sum(int n, ReflectingReading reading);

/// Closed rational forms of Q_n evaluated at w. For the reflecting chain the
/// value is Q_n as a function of w (that is, of w~ = w + 1/w).
/// Poles: w = -1 (periodic, twisted), w in {0, 1, -1} (reflecting) -> DomainError.
template <class R>
R q_rational_eval(Boundary b, int n, const R& w);

extern template BigRat q_rational_eval<BigRat>(Boundary, int, const BigRat&);
extern template CycloQ q_rational_eval<CycloQ>(Boundary, int, const CycloQ&);

/// Q_{n+1} obtained from Q_n and Q_{n-1} through the three-term recursion,
/// dividing exactly by (w+1)^2 (3n+2). Requires n >= 1.
UniPoly<BigRat> recursion_next(int n);

/// True iff (w+1)^2 (3n+2) Q_{n+1} = 3(w^3-1)(2n+1) Q_n - (w^2-w+1)^2 (3n+1) Q_{n-1}
/// holds as a polynomial identity for the closed-form e-values.
bool check_recursion_periodic(int n);

struct SpecialValues {
  BigRat q_at_zero;            // Q_n(0)
  BigRat q_at_zero_expected;   // (-1)^n
  CycloQ q2n_q_at_qinv;        // q^{2n} Q_n(q^{-1})
  BigRat q2n_expected;         // 2^n prod (2j-1)/(3j-1)
  CycloQ corollary;            // prod (1 + z_j + z_j^2) = (-3/q)^n e_n / Q_n(1/q)^2
  BigRat corollary_expected;   // (3/4)^n prod ((3j-1)/(2j-1))^2
  bool ok() const;
};
SpecialValues special_values_periodic(int n);

enum class HypIdentity {
  kHyp1,
  /// Second identity with lower binomial index 2n-1, the form the twisted resummation needs.
  kHyp2,
  /// Second identity exactly as printed, lower index 2n.
  kHyp2AsPrinted,
};
std::string_view to_string(HypIdentity h);

struct HypCheck {
  BigRat lhs;
  BigRat rhs;
  bool holds() const { return lhs == rhs; }
};
HypCheck verify_hyp_identity(HypIdentity which, int n, int s, exact::BinomialConvention convention);

/// sum_p (-1)^p binom(n-p, p) x^{n-2p}, so that at x = w + 1/w it equals
/// (w^{n+1} - w^{-n-1}) / (w - 1/w).
UniPoly<BigRat> chebyshev_expand(int n);

}  // namespace qfunc
}  // namespace xxz
