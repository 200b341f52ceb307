#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/exact/ring.hpp"

namespace xxz {

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Always trimmed: the leading stored coefficient is nonzero, and the zero
/// polynomial stores nothing and has degree kZeroDegree.
template <exact::ExactRing R>
class UniPoly {
 public:
  static constexpr long kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(R c) { return UniPoly(std::vector<R>{std::move(c)}); }
  /// c * x^k
  static UniPoly monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& leading() const { return c_.back(); }

  /// Horner evaluation in any ring S that R embeds into.
  template <class S>
  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = S(acc * x + S(*it));
    return acc;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = R(c_[i] - o.c_[i]);
    trim();
    return *this;
  }
  UniPoly& operator*=(const R& s) {
    for (auto& x : c_) x = R(x * s);
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const R& s) { return a *= s; }
  friend UniPoly operator*(const R& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = R(-x);
    return r;
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (exact::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = R(out[i + j] + a.c_[i] * b.c_[j]);
    }
    return UniPoly(std::move(out));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly pow(unsigned k) const {
    UniPoly r = constant(R(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && exact::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

namespace exact {

/// Quotient and remainder of long division over a field.
template <ExactField R>
std::pair<UniPoly<R>, UniPoly<R>> poly_divmod(const UniPoly<R>& num, const UniPoly<R>& den) {
  if (den.is_zero()) throw DomainError("poly_divmod: division by the zero polynomial");
  std::vector<R> rem = num.coeffs();
  const long dd = den.degree();
  if (num.degree() < dd) return {UniPoly<R>{}, num};
  std::vector<R> quot(static_cast<std::size_t>(num.degree() - dd + 1), R(0));
  const R lead_inv = R(R(1) / den.leading());
  for (long k = num.degree() - dd; k >= 0; --k) {
    R f = R(rem[static_cast<std::size_t>(k + dd)] * lead_inv);
    quot[static_cast<std::size_t>(k)] = f;
    if (is_zero(f)) continue;
    for (long j = 0; j <= dd; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = R(r - f * den.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  return {UniPoly<R>(std::move(quot)), UniPoly<R>(std::move(rem))};
}

/// num / den when den divides num; a nonzero remainder raises ExactnessError.
template <ExactField R>
UniPoly<R> poly_div_exact(const UniPoly<R>& num, const UniPoly<R>& den) {
  auto [q, r] = poly_divmod(num, den);
  if (!r.is_zero()) {
    throw ExactnessError("poly_div_exact: nonzero remainder of degree " + std::to_string(r.degree()));
  }
  return q;
}

}  // namespace exact
}  // namespace xxz
