#pragma once

#include "xxz/exact/rational.hpp"

namespace xxz::asmnum {

/// A_n = prod_{j=0}^{n-1} (3j+1)! / (n+j)!
BigInt asm_count(int n);
/// Same number from the triangular form prod_{1<=i<=j<=n} (n+i+j-1)/(2i+j-1).
BigInt asm_count_triangular(int n);
/// Vertically symmetric ASMs of odd order m = 2n+1. Even m: DomainError.
BigInt asm_v(int m);
/// Cyclically symmetric transpose complement plane partitions, even m = 2n >= 2. Odd m: DomainError.
BigInt n8(int m);
/// Half-turn symmetric ASMs of odd order m = 2n+1. Even m: DomainError.
BigInt asm_ht(int m);

}  // namespace xxz::asmnum
