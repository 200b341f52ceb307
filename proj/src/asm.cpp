#include "xxz/detlab/asm.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace xxz::detlab {

AsmMatrix::AsmMatrix(std::size_t n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries)) {
  if (!is_alternating(n_, entries_)) throw std::invalid_argument("AsmMatrix: not an alternating sign matrix");
  for (auto e : entries_)
    if (e < 0) ++num_neg_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const int a = (*this)(i, j);
      if (a == 0) continue;
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = 0; l < j; ++l) inversion_number_ += a * (*this)(k, l);
    }
}

bool AsmMatrix::is_alternating(std::size_t n, const std::vector<std::int8_t>& entries) {
  if (entries.size() != n * n) return false;
  auto line_ok = [&](auto at) {
    int partial = 0;
    for (std::size_t t = 0; t < n; ++t) {
      const int v = at(t);
      if (v < -1 || v > 1) return false;
      partial += v;
      if (partial < 0 || partial > 1) return false;
    }
    return partial == 1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!line_ok([&](std::size_t t) { return int(entries[i * n + t]); })) return false;
    if (!line_ok([&](std::size_t t) { return int(entries[t * n + i]); })) return false;
  }
  return true;
}

bool AsmMatrix::is_half_turn_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (*this)(n_ - 1 - i, n_ - 1 - j)) return false;
  return true;
}

bool AsmMatrix::is_vertically_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != (*this)(i, n_ - 1 - j)) return false;
  return true;
}

std::vector<AsmMatrix> asm_enumerate(std::size_t n) {
  if (n > kMaxAsmOrder) {
    throw SizeError("asm_enumerate: n = " + std::to_string(n) + " exceeds the guard " + std::to_string(kMaxAsmOrder));
  }
  std::vector<AsmMatrix> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<std::int8_t>{});
    return out;
  }

  // Row k of a monotone triangle is the set of columns whose partial column
  // sum over the first k ASM rows equals 1. Consecutive rows interlace.
  std::vector<std::int8_t> entries(n * n, 0);
  std::function<void(std::size_t, const std::vector<int>&)> extend;
  extend = [&](std::size_t row, const std::vector<int>& prev) {
    if (row == n) {
      out.emplace_back(n, entries);
      return;
    }
    const std::size_t k = prev.size();
    std::vector<int> next(k + 1);
    std::function<void(std::size_t)> pick = [&](std::size_t idx) {
      if (idx == k + 1) {
        for (std::size_t j = 0; j < n; ++j) entries[row * n + j] = 0;
        for (int c : next) entries[row * n + static_cast<std::size_t>(c)] += 1;
        for (int c : prev) entries[row * n + static_cast<std::size_t>(c)] -= 1;
        extend(row + 1, next);
        return;
      }
      int lo = idx == 0 ? 0 : next[idx - 1] + 1;
      if (idx > 0) lo = std::max(lo, prev[idx - 1]);
      const int hi = idx < k ? prev[idx] : static_cast<int>(n) - 1;
      for (int c = lo; c <= hi; ++c) {
        next[idx] = c;
        pick(idx + 1);
      }
    };
    pick(0);
  };
  extend(0, {});
  return out;
}

}  // namespace xxz::detlab
