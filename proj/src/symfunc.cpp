#include "xxz/symfunc/symfunc.hpp"

namespace xxz::symfunc {

void for_each_ssyt(const Partition& p, int n, const std::function<void(const Tableau&)>& fn) {
  Tableau t(p.length());
  for (std::size_t r = 0; r < p.length(); ++r) t[r].assign(static_cast<std::size_t>(p[r]), 0);
  if (p.empty()) {
    fn(t);
    return;
  }
  if (static_cast<int>(p.length()) > n) return;

  const Partition conj = p.conjugate();
  struct Cell {
    std::size_t r, c;
    int height;
  };
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < conj.length(); ++c)
    for (std::size_t r = 0; r < static_cast<std::size_t>(conj[c]); ++r) cells.push_back({r, c, conj[c]});

  std::uint64_t produced = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      if (++produced > kEnumerationGuard) throw SizeError("for_each_ssyt: more than 10^7 tableaux");
      fn(t);
      return;
    }
    const auto [r, c, height] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    // leave room for the strictly increasing entries below in this column
    const int hi = n - (height - 1 - static_cast<int>(r));
    for (int v = lo; v <= hi; ++v) {
      t[r][c] = v;
      fill(idx + 1);
    }
  };
  fill(0);
}

}  // namespace xxz::symfunc
