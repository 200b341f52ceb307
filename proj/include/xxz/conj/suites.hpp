#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace xxz::suites {

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checks > 0; }
};

/// Schur function by tableaux, bialternant, Nagelsbach-Kostka and Jacobi-Trudi,
/// the duality determinants h <-> e, E(t)H(-t) = 1, E(t) = prod (1 + x_i t) and
/// the involution NK(lambda, h) = s_{lambda'}, on random rational variables
/// (3 to 6 of them) for all partitions of weight <= max_weight with <= max_parts parts.
SuiteResult symfunc_cross_identities(std::uint32_t seed, int trials = 50, int max_weight = 8, int max_parts = 5);

/// Dodgson condensation against the ASM expansion on random nonzero rational
/// matrices n <= 4, lambda = -1 against det_exact, |ASM_n| = A_n for n <= 6,
/// and det_lambda(w_i^{n-j}) = prod_{i<j} (w_i + lambda w_j) for n <= 6.
SuiteResult lambda_det_suite(std::uint32_t seed, int trials = 30);

}  // namespace xxz::suites
