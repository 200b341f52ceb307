#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "xxz/detlab/determinant.hpp"
#include "xxz/errors.hpp"
#include "xxz/exact/ring.hpp"
#include "xxz/symfunc/partition.hpp"

namespace xxz {

enum class SymKind { kElementary, kComplete };

/// Values v_0..v_N of e_k or h_k for some n underlying variables.
///
/// The table stands in for the variables themselves: the determinantal
/// identities only ever need these values, which is what lets Schur functions
/// be evaluated at Bethe roots that are never computed.
template <exact::ExactRing R>
class SymTable {
 public:
  SymTable(SymKind kind, std::size_t nvars, std::vector<R> values)
      : kind_(kind), nvars_(nvars), values_(std::move(values)) {
    if (values_.empty() || values_.front() != R(1)) throw std::invalid_argument("SymTable: v_0 must be 1");
    if (kind_ == SymKind::kElementary) {
      for (std::size_t k = nvars_ + 1; k < values_.size(); ++k)
        if (!exact::is_zero(values_[k])) throw std::invalid_argument("SymTable: e_k must vanish for k > nvars");
    }
  }

  SymKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<R>& values() const { return values_; }

  /// v_k with the conventions v_k = 0 for k < 0 and e_k = 0 for k > nvars.
  /// Any other index past the stored entries is a RangeError.
  R at(long k) const {
    if (k < 0) return R(0);
    const auto uk = static_cast<std::size_t>(k);
    if (uk < values_.size()) return values_[uk];
    if (kind_ == SymKind::kElementary && uk > nvars_) return R(0);
    throw RangeError("SymTable: index " + std::to_string(k) + " beyond the " + std::to_string(values_.size()) +
                     " stored values");
  }

 private:
  SymKind kind_;
  std::size_t nvars_;
  std::vector<R> values_;
};

namespace symfunc {

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Coefficients of prod_j (1 + w_j t), by incremental multiplication.
template <exact::ExactRing R>
SymTable<R> elem_brute(std::span<const R> vars) {
  std::vector<R> c{R(1)};
  for (const auto& w : vars) {
    c.push_back(R(0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = R(c[k] + w * c[k - 1]);
  }
  return SymTable<R>(SymKind::kElementary, vars.size(), std::move(c));
}

namespace detail {

/// det(t_{row_index[i] + j}) with 0-based i, j.
template <exact::ExactRing R>
R toeplitz_like_det(const SymTable<R>& t, std::span<const long> row_index) {
  const std::size_t k = row_index.size();
  ExactMatrix<R> m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = t.at(row_index[i] + static_cast<long>(j));
  return detlab::det_exact(std::move(m));
}

}  // namespace detail

/// h_k = det(e_{1-i+j})_{k x k}; zero for k < 0.
template <exact::ExactRing R>
R complete_from_elem(const SymTable<R>& e, long k) {
  if (k < 0) return R(0);
  std::vector<long> rows(static_cast<std::size_t>(k));
  for (long i = 1; i <= k; ++i) rows[static_cast<std::size_t>(i - 1)] = 2 - i;
  return detail::toeplitz_like_det(e, rows);
}

/// e_k = det(h_{1-i+j})_{k x k}; zero for k < 0.
template <exact::ExactRing R>
R elem_from_complete(const SymTable<R>& h, long k) {
  if (k < 0) return R(0);
  std::vector<long> rows(static_cast<std::size_t>(k));
  for (long i = 1; i <= k; ++i) rows[static_cast<std::size_t>(i - 1)] = 2 - i;
  return detail::toeplitz_like_det(h, rows);
}

/// Table h_0..h_N from an elementary table.
template <exact::ExactRing R>
SymTable<R> complete_table(const SymTable<R>& e, std::size_t max_degree) {
  std::vector<R> h;
  h.reserve(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) h.push_back(complete_from_elem(e, static_cast<long>(k)));
  return SymTable<R>(SymKind::kComplete, e.nvars(), std::move(h));
}

/// Nagelsbach-Kostka: s_mu = det(e_{mu'_i - i + j}), size = number of parts of mu'.
template <exact::ExactRing R>
R schur_nk(const Partition& p, const SymTable<R>& e) {
  const Partition conj = p.conjugate();
  std::vector<long> rows(conj.length());
  for (std::size_t i = 0; i < conj.length(); ++i) rows[i] = conj[i] - static_cast<long>(i + 1) + 1;
  return detail::toeplitz_like_det(e, rows);
}

/// Jacobi-Trudi: s_mu = det(h_{mu_i + j - i}), size = number of parts of mu.
template <exact::ExactRing R>
R schur_jt(const Partition& p, const SymTable<R>& h) {
  std::vector<long> rows(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) rows[i] = p[i] + 1 - static_cast<long>(i + 1);
  return detail::toeplitz_like_det(h, rows);
}

/// A semistandard filling, rows[r][c] in 1..n.
using Tableau = std::vector<std::vector<int>>;

/// Calls fn on every semistandard tableau of shape p with entries in 1..n
/// (rows weakly increasing, columns strictly increasing). Cells are filled
/// column by column. Throws SizeError once more than kEnumerationGuard
/// tableaux have been produced.
void for_each_ssyt(const Partition& p, int n, const std::function<void(const Tableau&)>& fn);

/// Schur polynomial as the tableau sum over w^T.
template <exact::ExactRing R>
R schur_tableaux(const Partition& p, std::span<const R> vars) {
  const int n = static_cast<int>(vars.size());
  R total(0);
  for_each_ssyt(p, n, [&](const Tableau& t) {
    R mono(1);
    for (const auto& row : t)
      for (int v : row) mono = R(mono * vars[static_cast<std::size_t>(v - 1)]);
    total = R(total + mono);
  });
  return total;
}

/// Ratio of alternants det(w_i^{n-j+mu_j}) / det(w_i^{n-j}).
/// Repeated variables make the denominator vanish: SingularError.
template <exact::ExactField R>
R schur_vandermonde(const Partition& p, std::span<const R> vars) {
  const std::size_t n = vars.size();
  if (p.length() > n) return R(0);
  ExactMatrix<R> num(n, n), den(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto base = static_cast<unsigned long>(n - 1 - j);
      den(i, j) = exact::ipow(vars[i], base);
      num(i, j) = exact::ipow(vars[i], base + static_cast<unsigned long>(p[j]));
    }
  const R d = detlab::det_exact(std::move(den));
  if (exact::is_zero(d)) throw SingularError("schur_vandermonde: repeated variables, Vandermonde determinant is zero");
  return R(detlab::det_exact(std::move(num)) / d);
}

/// m_mu: sum over the distinct permutations of (mu_1, ..., mu_l, 0, ..., 0).
template <exact::ExactRing R>
R monomial_sym(const Partition& p, std::span<const R> vars) {
  const std::size_t n = vars.size();
  if (p.length() > n) return R(0);
  std::vector<int> exps(n, 0);
  for (std::size_t i = 0; i < p.length(); ++i) exps[i] = p[i];
  std::sort(exps.begin(), exps.end());
  R total(0);
  std::uint64_t count = 0;
  do {
    if (++count > kEnumerationGuard) throw SizeError("monomial_sym: enumeration guard exceeded");
    R mono(1);
    for (std::size_t i = 0; i < n; ++i) mono = R(mono * exact::ipow(vars[i], static_cast<unsigned long>(exps[i])));
    total = R(total + mono);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

}  // namespace symfunc
}  // namespace xxz
