#include "xxz/asmnum/asm_numbers.hpp"

#include <string>

#include "xxz/errors.hpp"

namespace xxz::asmnum {
namespace {

using exact::factorial;

BigInt to_integer(const BigRat& r, const char* who) {
  if (r.get_den() != 1) {
    throw ExactnessError(std::string(who) + ": product did not reduce to an integer (" + exact::to_string(r) + ")");
  }
  return r.get_num();
}

BigRat fact_ratio(unsigned long a, unsigned long b) { return BigRat(factorial(a), factorial(b)); }

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

}  // namespace

BigInt asm_count(int n) {
  require(n >= 0, "asm_count: n must be non-negative");
  BigRat r = 1;
  for (int j = 0; j < n; ++j) r *= fact_ratio(3 * j + 1, n + j);
  return to_integer(r, "asm_count");
}

BigInt asm_count_triangular(int n) {
  require(n >= 0, "asm_count: n must be non-negative");
  BigRat r = 1;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) r *= BigRat(n + i + j - 1, 2 * i + j - 1);
  return to_integer(r, "asm_count_triangular");
}

BigInt asm_v(int m) {
  require(m >= 1 && m % 2 == 1, "asm_v: order must be odd and positive");
  const int n = (m - 1) / 2;
  BigRat r = 1;
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<unsigned long>(j);
    r *= BigRat(BigInt(3 * j + 2) * factorial(2 * uj + 1) * factorial(6 * uj + 3),
                factorial(4 * uj + 2) * factorial(4 * uj + 3));
  }
  return to_integer(r, "asm_v");
}

BigInt n8(int m) {
  require(m >= 2 && m % 2 == 0, "n8: order must be even and at least 2");
  const int n = m / 2;
  BigRat r = 1;
  for (int i = 1; i < n; ++i) {
    const auto ui = static_cast<unsigned long>(i);
    r *= BigRat(BigInt(3 * i + 1) * factorial(2 * ui) * factorial(6 * ui), factorial(4 * ui) * factorial(4 * ui + 1));
  }
  return to_integer(r, "n8");
}

BigInt asm_ht(int m) {
  require(m >= 1 && m % 2 == 1, "asm_ht: order must be odd and positive");
  const int n = (m - 1) / 2;
  const BigInt a = asm_count(n);
  BigRat r = BigRat(a * a);
  for (int k = 1; k <= n; ++k) {
    const BigRat t(3 * k - 1, 2 * k - 1);
    r *= BigRat(3, 4) * t * t;
  }
  return to_integer(r, "asm_ht");
}

}  // namespace xxz::asmnum
