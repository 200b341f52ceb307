#include "xxz/exact/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "xxz/errors.hpp"

namespace xxz::exact {

std::string_view to_string(BinomialConvention c) {
  switch (c) {
    case BinomialConvention::kTruncating:
      return "truncating";
    case BinomialConvention::kFallingFactorial:
      return "falling-factorial";
  }
  return "unknown";
}

namespace {

BigRat falling_product(const BigRat& a, long k) {
  BigRat r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= (a - k + j);
    r /= j;
  }
  return r;
}

}  // namespace

BigRat gen_binom(const BigRat& a, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (is_integer(a)) {
    const BigInt& top = a.get_num();
    if (cmp(top, k) < 0) return 0;
    if (!top.fits_ulong_p()) return falling_product(a, k);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), top.get_ui(), static_cast<unsigned long>(k));
    return BigRat(r);
  }
  return falling_product(a, k);
}

BigRat binom(const BigRat& a, long k, BinomialConvention convention) {
  if (convention == BinomialConvention::kTruncating) return gen_binom(a, k);
  if (k < 0) return 0;
  return falling_product(a, k);
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigRat pow(const BigRat& x, long k) {
  if (k < 0) {
    if (x == 0) throw DomainError("pow: zero raised to a negative power");
    return pow(BigRat(1) / x, -k);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(k));
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

BigRat parse_rat(std::string_view text) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto first = std::find_if(text.begin(), text.end(), not_space);
  auto last = std::find_if(text.rbegin(), text.rend(), not_space).base();
  if (first >= last) throw std::invalid_argument("empty rational");
  std::string s(first, last);
  if (s.front() == '+') s.erase(0, 1);
  auto valid_int = [](std::string_view v) {
    if (!v.empty() && v.front() == '-') v.remove_prefix(1);
    return !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational: " + s);
  }
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  BigRat r(BigInt(num), d);
  r.canonicalize();
  return r;
}

}  // namespace xxz::exact
