#pragma once

#include <iosfwd>
#include <string>

#include "xxz/exact/rational.hpp"

namespace xxz {

/// Element a + b*q of Q(q), q = e^{i pi/3}, with q^2 = q - 1.
///
/// q is a primitive sixth root of unity, so q^{-1} = 1 - q = conj(q) and
/// q^3 = -1. Every phase e^{i k pi/3} is the single power q^k.
class CycloQ {
 public:
  CycloQ() = default;
  CycloQ(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  CycloQ(BigRat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  CycloQ(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycloQ q() { return {BigRat(0), BigRat(1)}; }
  static CycloQ q_inv() { return {BigRat(1), BigRat(-1)}; }

  const BigRat& a() const { return a_; }
  const BigRat& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Complex conjugate: q -> 1 - q.
  CycloQ conj() const { return {a_ + b_, -b_}; }
  /// x * conj(x) = a^2 + ab + b^2, always rational.
  BigRat norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

  CycloQ inv() const;

  CycloQ& operator+=(const CycloQ& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  CycloQ& operator-=(const CycloQ& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  CycloQ& operator*=(const CycloQ& o);
  CycloQ& operator/=(const CycloQ& o) { return *this *= o.inv(); }

  friend CycloQ operator+(CycloQ x, const CycloQ& y) { return x += y; }
  friend CycloQ operator-(CycloQ x, const CycloQ& y) { return x -= y; }
  friend CycloQ operator*(CycloQ x, const CycloQ& y) { return x *= y; }
  friend CycloQ operator/(CycloQ x, const CycloQ& y) { return x /= y; }
  CycloQ operator-() const { return {-a_, -b_}; }

  friend bool operator==(const CycloQ& x, const CycloQ& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const CycloQ& x, const CycloQ& y) { return !(x == y); }

 private:
  BigRat a_{0};
  BigRat b_{0};
};

namespace exact {

CycloQ cyclo_mul(const CycloQ& x, const CycloQ& y);
/// Throws DomainError for x = 0.
CycloQ cyclo_inv(const CycloQ& x);
/// Repeated squaring; negative k goes through the inverse.
CycloQ cyclo_pow(const CycloQ& x, long k);

/// "a" when b = 0, otherwise "a + b*q" with rationals printed as p/q.
std::string to_string(const CycloQ& x);

}  // namespace exact

std::ostream& operator<<(std::ostream& os, const CycloQ& x);

}  // namespace xxz
