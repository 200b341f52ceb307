#include "doctest.h"
#include "xxz/asmnum/asm_numbers.hpp"
#include "xxz/detlab/asm.hpp"
#include "xxz/errors.hpp"

using namespace xxz;
using namespace xxz::asmnum;

TEST_CASE("ASM counts") {
  const long an[] = {1, 1, 2, 7, 42, 429, 7436};
  for (int n = 0; n <= 6; ++n) CHECK(asm_count(n) == an[n]);
  for (int n = 0; n <= 30; ++n) CHECK(asm_count(n) == asm_count_triangular(n));
  for (int n = 0; n <= 6; ++n) CHECK(asm_count(n) == detlab::asm_enumerate(static_cast<std::size_t>(n)).size());
}

TEST_CASE("symmetry classes") {
  CHECK(asm_v(1) == 1);
  CHECK(asm_v(3) == 1);
  CHECK(asm_v(5) == 3);
  CHECK(asm_v(7) == 26);
  CHECK(n8(2) == 1);
  CHECK(n8(4) == 2);
  CHECK(n8(6) == 11);
  CHECK(asm_ht(1) == 1);
  CHECK(asm_ht(3) == 3);
  CHECK(asm_ht(5) == 25);
  CHECK_THROWS_AS(asm_v(4), DomainError);
  CHECK_THROWS_AS(n8(3), DomainError);
  CHECK_THROWS_AS(asm_ht(2), DomainError);
  for (int m = 1; m <= 41; m += 2) {
    CHECK(asm_v(m) > 0);
    CHECK(asm_ht(m) > 0);
    CHECK(n8(m + 1) > 0);
  }
  for (std::size_t m : {1u, 3u, 5u}) {
    long ht = 0, v = 0;
    for (const auto& a : detlab::asm_enumerate(m)) {
      ht += a.is_half_turn_symmetric();
      v += a.is_vertically_symmetric();
    }
    CHECK(asm_ht(static_cast<int>(m)) == ht);
    CHECK(asm_v(static_cast<int>(m)) == v);
  }
}
