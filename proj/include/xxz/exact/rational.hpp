#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <utility>
#include <string_view>

namespace xxz {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator.
///
/// gmpxx results of arithmetic are canonical, but mpq_class(num, den) is not,
/// and equality assumes canonical operands. This wrapper canonicalizes the
/// two-argument form and is otherwise an mpq_class.
class BigRat : public mpq_class {
 public:
  using mpq_class::operator=;
  BigRat() = default;
  BigRat(const BigRat&) = default;
  BigRat(BigRat&&) = default;
  BigRat& operator=(const BigRat&) = default;
  BigRat& operator=(BigRat&&) = default;
  template <class T>
    requires std::constructible_from<mpq_class, T&&>
  BigRat(T&& x) : mpq_class(std::forward<T>(x)) {}  // NOLINT(google-explicit-constructor)
  template <class N, class D>
  BigRat(const N& num, const D& den) : mpq_class(mpz_class(num), mpz_class(den)) {
    canonicalize();
  }
};

namespace exact {

/// How binomial coefficients with an integer upper index treat top < bottom.
enum class BinomialConvention {
  /// binom(a, k) = 0 whenever a is an integer with a < k, negative tops included.
  kTruncating,
  /// binom(a, k) = a(a-1)...(a-k+1)/k! for every a (polynomial in the upper index).
  kFallingFactorial,
};

std::string_view to_string(BinomialConvention c);

/// Generalised binomial coefficient under the truncating convention:
///   k < 0             -> 0
///   k = 0             -> 1
///   a integer, a < k  -> 0   (this includes every negative a)
///   otherwise         -> prod_{j=1}^{k} (a - k + j) / j
BigRat gen_binom(const BigRat& a, long k);

BigRat binom(const BigRat& a, long k, BinomialConvention convention);

BigInt factorial(unsigned long n);

/// x^k for any integer k; x = 0 with k < 0 raises DomainError.
BigRat pow(const BigRat& x, long k);

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRat& x);
std::string to_string(const BigInt& x);

/// Inverse of to_string; also accepts surrounding whitespace. Throws std::invalid_argument.
BigRat parse_rat(std::string_view text);

inline bool is_integer(const BigRat& x) { return x.get_den() == 1; }

}  // namespace exact
}  // namespace xxz
