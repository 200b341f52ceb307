#pragma once

#include <mpfr.h>

#include <string>

#include "xxz/exact/cyclo.hpp"
#include "xxz/exact/rational.hpp"

namespace xxz {

/// Owning MPFR float. The precision travels with the value; binary
/// operations produce a result at the larger of the operand precisions,
/// correctly rounded to nearest.
class BigFloat {
 public:
  static constexpr long kDefaultPrecision = 256;

  explicit BigFloat(long prec = kDefaultPrecision);
  BigFloat(long v, long prec);
  BigFloat(double v, long prec);
  BigFloat(const BigRat& v, long prec);
  /// Decimal or scientific notation; std::invalid_argument on malformed text.
  BigFloat(const std::string& text, long prec);
  BigFloat(const char* text, long prec) : BigFloat(std::string(text), prec) {}

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  /// Copy rounded (or widened) to another precision.
  BigFloat rounded(long prec) const;

  static BigFloat pi(long prec);
  /// 2^k at the given precision.
  static BigFloat exp2(long k, long prec);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits
  /// (0: enough digits to round-trip the precision).
  std::string to_string(int digits = 0) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex number with BigFloat parts, both at the same precision.
class BigComplex {
 public:
  explicit BigComplex(long prec = BigFloat::kDefaultPrecision) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(const BigFloat& re);  // NOLINT(google-explicit-constructor)
  BigComplex(const BigRat& re, long prec) : re_(re, prec), im_(prec) {}
  BigComplex(long re, long prec) : re_(re, prec), im_(prec) {}
  /// Embedding of a + b q with q = 1/2 + i sqrt(3)/2.
  BigComplex(const CycloQ& x, long prec);

  /// e^{i k pi / 3}
  static BigComplex q_power(long k, long prec);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long precision() const { return re_.precision(); }
  BigComplex rounded(long prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  /// Division by exact zero raises DomainError.
  BigComplex& operator/=(const BigComplex& o);
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

  /// "re im" in scientific notation.
  std::string to_string(int digits = 0) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex inv(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);
/// Principal branch exp(a log z).
BigComplex pow(const BigComplex& z, const BigFloat& a);
BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);

}  // namespace xxz
