#pragma once

#include <vector>

#include "xxz/numeric/bigfloat.hpp"
#include "xxz/qfunc/qfunctions.hpp"

namespace xxz {

/// Groundstate Bethe roots at a working precision.
///
/// Periodic and twisted chains: w holds the n roots of Q_n. Reflecting
/// chain: wt holds the n roots w~_i of Q_n(w~), and w holds 2n values with
/// w[i] the root of w^2 - w~_i w + 1 with |w| >= 1 and w[i+n] = 1/w[i].
struct RootSet {
  Boundary boundary = Boundary::kPeriodic;
  int n = 0;
  int L = 0;
  long precision = BigFloat::kDefaultPrecision;
  std::vector<BigComplex> wt;
  std::vector<BigComplex> w;
  /// Max Bethe-equation defect over the independent roots.
  BigFloat residual{BigFloat::kDefaultPrecision};

  /// The n independent roots (w for periodic/twisted, the first n of w for reflecting).
  std::vector<BigComplex> independent() const;
};

namespace numeric {

inline constexpr int kMaxAberthIterations = 2000;

/// All roots of a polynomial with rational coefficients (highest degree
/// last), by Aberth-Ehrlich iteration from a perturbed circle followed by
/// Newton polishing. Iterates with guard bits and rounds the roots to the
/// requested precision. Throws NumericFailure after kMaxAberthIterations.
std::vector<BigComplex> polynomial_roots(const std::vector<BigRat>& coeffs, long precision);

/// max_k |c_k - c~_k| / max_k |c_k| where c~ are the coefficients of prod (x - r_i) times the leading coefficient.
BigFloat reconstruction_error(const std::vector<BigRat>& coeffs, const std::vector<BigComplex>& roots);

/// Roots of a QPolynomial, with the Bethe residual filled in. Chain length
/// is qp.chain_length(). The reconstruction check uses tolerance 2^(20 - precision).
RootSet solve_roots(const QPolynomial& qp, long precision);

/// Reflecting chain of odd length L = 2n+1. No closed Q-function is
/// available, so the L = 2n roots are continued in the (real) exponent 2L
/// of the open Bethe equations from 2L = 4n to 4n+2 and then Newton-polished
/// at the integer length.
RootSet solve_reflecting_odd(int n, long precision, int steps = 40);

/// Roots for the open chain of any length L >= 2 in sector floor(L/2).
RootSet solve_open_chain(int L, long precision);

/// Split w~ into the root of w^2 - w~ w + 1 with |w| >= 1 (tie: Im w > 0).
BigComplex split_reflecting(const BigComplex& wt);

/// z = (q - w)/(q w - 1); pole at w = 1/q raises DomainError.
BigComplex to_z(const BigComplex& w);
/// w = (z + q)/(q z + 1); pole at z = -1/q raises DomainError.
BigComplex to_w(const BigComplex& z);

/// Left-hand sides of the Bethe equations for the independent roots, at chain length L.
/// Periodic: z_i^L + prod_j (w_i - q^2 w_j)/(q^2 w_i - w_j), the j = i factor being -1;
/// twisted: the product carries an extra q^{-2}; reflecting: z_i^{2L} - prod_{j != i} (...).
std::vector<BigComplex> bethe_defects(Boundary b, const std::vector<BigComplex>& w, int L);
/// max_i |defect_i| for the stored roots and length.
BigFloat bethe_residual(const RootSet& rs);

/// E = -L Delta/2 - sum (z + 1/z - 2 Delta), Delta = -1/2; (L-1) for the reflecting chain.
BigComplex energy(const RootSet& rs);
/// sum over the independent roots of z + 1/z.
BigComplex z_sum(const RootSet& rs);

inline constexpr int kMaxPermutationN = 8;

/// sum_pi prod_{i<j} q^{-1} ((q w_pi_i - 1)/(q - w_pi_i))^k (w_pi_i - q^2 w_pi_j)/(w_pi_j - w_pi_i), k = 1.
BigComplex component_sum_small(const RootSet& rs);
/// Same with k = 2.
BigComplex component_sum_large(const RootSet& rs);

/// psi(x_1, ..., x_n) from the Bethe Ansatz. Positions are 1-based and strictly increasing.
/// Reflecting chain: sum over permutations and signs, n <= 5.
BigComplex wavefunction_component(const RootSet& rs, const std::vector<int>& positions);

/// prod_{i=1}^{2n} prod_{j not in {i, i+-n}} (1 + z_i + z_i z_j) for a reflecting root set.
BigComplex reflecting_double_product(const RootSet& rs);

/// prod_{i != j} (1 + z_i + z_i z_j) over the n roots (periodic and twisted).
BigComplex double_product(const RootSet& rs);

/// prod_{i<j} (w_i^3 - w_j^3)/(w_i - w_j), the Schur function s_{(2(n-1),...,2,0)} at the roots.
BigComplex staircase_schur_numeric(const RootSet& rs);

}  // namespace numeric
}  // namespace xxz
