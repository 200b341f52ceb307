#include "xxz/exact/cyclo.hpp"

#include <ostream>

#include "xxz/errors.hpp"

namespace xxz {

CycloQ& CycloQ::operator*=(const CycloQ& o) {
  // (a1 + b1 q)(a2 + b2 q) = a1 a2 + (a1 b2 + a2 b1) q + b1 b2 (q - 1)
  BigRat bb = b_ * o.b_;
  BigRat na = a_ * o.a_ - bb;
  BigRat nb = a_ * o.b_ + o.a_ * b_ + bb;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

CycloQ CycloQ::inv() const {
  if (is_zero()) throw DomainError("CycloQ: inverse of zero");
  const BigRat n = norm();
  CycloQ c = conj();
  return {c.a_ / n, c.b_ / n};
}

std::ostream& operator<<(std::ostream& os, const CycloQ& x) { return os << exact::to_string(x); }

namespace exact {

CycloQ cyclo_mul(const CycloQ& x, const CycloQ& y) { return x * y; }

CycloQ cyclo_inv(const CycloQ& x) { return x.inv(); }

CycloQ cyclo_pow(const CycloQ& x, long k) {
  if (k < 0) return cyclo_pow(x.inv(), -k);
  CycloQ result(1);
  CycloQ base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const CycloQ& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*q";
}

}  // namespace exact
}  // namespace xxz
