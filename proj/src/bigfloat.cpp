#include "xxz/numeric/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "xxz/errors.hpp"

namespace xxz {
namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

long max_prec(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

void widen(BigFloat& x, long prec) {
  if (x.precision() < prec) mpfr_prec_round(x.get(), prec, kRnd);
}

}  // namespace

BigFloat::BigFloat(long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
BigFloat::BigFloat(long v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, kRnd);
}
BigFloat::BigFloat(double v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, kRnd);
}
BigFloat::BigFloat(const BigRat& v, long prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}
BigFloat::BigFloat(const std::string& text, long prec) {
  mpfr_init2(v_, prec);
  char* end = nullptr;
  mpfr_strtofr(v_, text.c_str(), &end, 10, kRnd);
  if (end == text.c_str() || *end != '\0') {
    mpfr_clear(v_);
    throw std::invalid_argument("BigFloat: cannot parse '" + text + "'");
  }
}
BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, kRnd);
}
BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, kRnd);
  }
  return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::rounded(long prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, kRnd);
  return r;
}

BigFloat BigFloat::exp2(long k, long prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.v_, r.v_, k, kRnd);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}
BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, o.precision());
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, o.precision());
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, o.precision());
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, o.precision());
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

#define XXZ_UNARY(name, fn)                \
  BigFloat name(const BigFloat& x) {       \
    BigFloat r(x.precision());             \
    fn(r.get(), x.get(), kRnd);            \
    return r;                              \
  }
XXZ_UNARY(abs, mpfr_abs)
XXZ_UNARY(sqrt, mpfr_sqrt)
XXZ_UNARY(exp, mpfr_exp)
XXZ_UNARY(log, mpfr_log)
XXZ_UNARY(sin, mpfr_sin)
XXZ_UNARY(cos, mpfr_cos)
#undef XXZ_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const long p = max_prec(re_, im_);
  widen(re_, p);
  widen(im_, p);
}

BigComplex::BigComplex(const BigFloat& re) : re_(re), im_(re.precision()) {}

BigComplex::BigComplex(const CycloQ& x, long prec) : re_(x.a(), prec), im_(x.b(), prec) {
  const BigFloat b(x.b(), prec);
  re_ += b / BigFloat(2L, prec);
  im_ = b * sqrt(BigFloat(3L, prec)) / BigFloat(2L, prec);
}

BigComplex BigComplex::q_power(long k, long prec) {
  long m = ((k % 6) + 6) % 6;
  // exact cos/sin of m pi/3
  const BigFloat half(BigRat(1, 2), prec), s3 = sqrt(BigFloat(3L, prec)) / BigFloat(2L, prec);
  const BigFloat one(1L, prec), zero(prec);
  switch (m) {
    case 0:
      return {one, zero};
    case 1:
      return {half, s3};
    case 2:
      return {-half, s3};
    case 3:
      return {-one, zero};
    case 4:
      return {-half, -s3};
    default:
      return {half, -s3};
  }
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), kRnd);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}
BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw DomainError("BigComplex: division by zero");
  const BigFloat n = o.norm();
  BigFloat r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  return *this;
}

std::string BigComplex::to_string(int digits) const { return re_.to_string(digits) + " " + im_.to_string(digits); }

BigComplex inv(const BigComplex& z) { return BigComplex(1L, z.precision()) / z; }

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return pow(inv(z), -k);
  BigComplex result(1L, z.precision()), base = z;
  auto e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

BigComplex exp(const BigComplex& z) {
  const BigFloat m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log: zero argument");
  return {log(z.abs()), atan2(z.im(), z.re())};
}

BigComplex pow(const BigComplex& z, const BigFloat& a) {
  BigComplex l = log(z);
  return exp(BigComplex(l.re() * a, l.im() * a));
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  // principal root: sqrt((|z| + re)/2) + i sign(im) sqrt((|z| - re)/2)
  const long p = z.precision();
  const BigFloat two(2L, p), m = z.abs();
  BigFloat a = sqrt((m + z.re()) / two);
  BigFloat b = sqrt(max((m - z.re()) / two, BigFloat(p)));
  if (z.im().sign() < 0) b = -b;
  return {a, b};
}

}  // namespace xxz
