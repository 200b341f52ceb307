#pragma once

#include <type_traits>

#include "xxz/exact/cyclo.hpp"
#include "xxz/exact/rational.hpp"

namespace xxz::exact {

/// Exact coefficient rings the generic algorithms are instantiated over.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static constexpr bool is_field = false;
};
template <>
struct RingTraits<BigRat> {
  static constexpr bool is_field = true;
};
template <>
struct RingTraits<CycloQ> {
  static constexpr bool is_field = true;
};

template <class R>
concept ExactRing = requires { RingTraits<R>::is_field; };

template <class R>
concept ExactField = ExactRing<R> && RingTraits<R>::is_field;

template <class R>
bool is_zero(const R& x) {
  if constexpr (std::is_same_v<R, CycloQ>) {
    return x.is_zero();
  } else {
    return sgn(x) == 0;
  }
}

/// x^k, k >= 0, by repeated squaring.
template <class R>
R ipow(R base, unsigned long k) {
  R result(1);
  while (k > 0) {
    if (k & 1) result = R(result * base);
    k >>= 1;
    if (k > 0) base = R(base * base);
  }
  return result;
}

}  // namespace xxz::exact
