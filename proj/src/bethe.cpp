#include "xxz/numeric/bethe.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "xxz/errors.hpp"

namespace xxz {

std::vector<BigComplex> RootSet::independent() const {
  if (boundary != Boundary::kReflecting) return w;
  return {w.begin(), w.begin() + n};
}

namespace numeric {
namespace {

BigComplex cq(long k, long prec) { return BigComplex::q_power(k, prec); }

BigFloat tol_bits(long bits, long prec) { return BigFloat::exp2(bits, prec); }

bool root_less(const BigComplex& a, const BigComplex& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

// Horner evaluation of p and p' (coefficients lowest degree first), plus the
// running sum of |c_k| |z|^k that bounds the rounding error of p.
void horner(const std::vector<BigFloat>& c, const BigComplex& z, BigComplex& p, BigComplex& dp, BigFloat* bound = nullptr) {
  const long prec = z.precision();
  p = BigComplex(c.back());
  dp = BigComplex(prec);
  BigFloat b = abs(c.back());
  const BigFloat m = z.abs();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + BigComplex(c[k]);
    b = b * m + abs(c[k]);
  }
  if (bound) *bound = b;
}

// Dense complex solve with partial pivoting; a is overwritten.
std::vector<BigComplex> solve_linear(std::vector<std::vector<BigComplex>> a, std::vector<BigComplex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (a[r][col].abs() > a[piv][col].abs()) piv = r;
    if (a[piv][col].is_zero()) throw SingularError("solve_linear: singular Jacobian");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigComplex f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(b[0].precision()));
  for (std::size_t i = n; i-- > 0;) {
    BigComplex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

// Open-chain equations with a real exponent: z_i^{e} - prod_{j != i} (...).
std::vector<BigComplex> open_defects(const std::vector<BigComplex>& w, const BigFloat& exponent, bool integral, long ie) {
  const long prec = w.empty() ? BigFloat::kDefaultPrecision : w[0].precision();
  const BigComplex q2 = cq(2, prec), one(1L, prec);
  std::vector<BigComplex> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const BigComplex z = to_z(w[i]);
    BigComplex prod = one;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == i) continue;
      prod *= (q2 * w[j] - w[i]) / (w[j] - q2 * w[i]);
      prod *= (q2 - w[i] * w[j]) / (one - q2 * w[i] * w[j]);
    }
    out.push_back((integral ? pow(z, ie) : pow(z, exponent)) - prod);
  }
  return out;
}

BigFloat max_abs(const std::vector<BigComplex>& v, long prec) {
  BigFloat m(prec);
  for (const auto& x : v) m = max(m, x.abs());
  return m;
}

// Newton iteration on the open equations with a finite-difference Jacobian.
void newton_open(std::vector<BigComplex>& w, const BigFloat& exponent, bool integral, long ie, const BigFloat& tol, int max_iter) {
  const std::size_t n = w.size();
  const long prec = w[0].precision();
  for (int it = 0; it < max_iter; ++it) {
    const auto f = open_defects(w, exponent, integral, ie);
    std::vector<std::vector<BigComplex>> jac(n, std::vector<BigComplex>(n, BigComplex(prec)));
    for (std::size_t k = 0; k < n; ++k) {
      const BigComplex h(BigFloat::exp2(-prec / 2, prec) * max(BigFloat(1L, prec), w[k].abs()));
      auto wp = w;
      wp[k] += h;
      const auto fp = open_defects(wp, exponent, integral, ie);
      for (std::size_t i = 0; i < n; ++i) jac[i][k] = (fp[i] - f[i]) / h;
    }
    std::vector<BigComplex> rhs;
    for (const auto& x : f) rhs.push_back(-x);
    const auto dx = solve_linear(std::move(jac), std::move(rhs));
    BigFloat step(prec);
    for (std::size_t k = 0; k < n; ++k) {
      w[k] += dx[k];
      step = max(step, dx[k].abs() / max(BigFloat(1L, prec), w[k].abs()));
    }
    if (step < tol) return;
  }
  std::ostringstream diag;
  diag << "exponent " << exponent.to_string(10) << ", n " << n;
  throw NumericFailure("Newton on the open Bethe equations did not converge", diag.str());
}

}  // namespace

std::vector<BigComplex> polynomial_roots(const std::vector<BigRat>& coeffs, long target) {
  if (coeffs.empty() || coeffs.back() == 0) throw DomainError("polynomial_roots: zero leading coefficient");
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return {};
  // Guard bits absorb the cancellation in evaluating the expanded polynomial.
  const long precision = target + 64 + 8 * static_cast<long>(d);
  std::vector<BigFloat> c;
  for (const auto& x : coeffs) c.emplace_back(x, precision);
  if (d == 1) return {BigComplex(-c[0] / c[1]).rounded(target)};

  // Starting radius from the geometric mean of the roots' moduli.
  BigFloat r = abs(c[0] / c[d]);
  if (r.is_zero()) r = BigFloat(1L, precision);
  r = exp(log(r) / BigFloat(static_cast<long>(d), precision));
  const BigFloat two_pi = BigFloat::pi(precision) * BigFloat(2L, precision);
  std::vector<BigComplex> z;
  for (std::size_t k = 0; k < d; ++k) {
    const BigFloat ang = two_pi * BigFloat(static_cast<long>(k), precision) / BigFloat(static_cast<long>(d), precision) +
                         BigFloat(0.4, precision);
    const BigFloat rk = r * (BigFloat(1L, precision) + BigFloat(0.01 * static_cast<double>(k), precision));
    z.emplace_back(rk * cos(ang), rk * sin(ang));
  }

  // A root is frozen once |p| is within a small multiple of the Horner rounding bound.
  const BigFloat noise = tol_bits(6 - precision, precision) * BigFloat(static_cast<long>(d), precision);
  BigComplex p(precision), dp(precision);
  BigFloat bound(precision);
  std::vector<bool> done(d, false);
  int it = 0;
  for (; it < kMaxAberthIterations; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      horner(c, z[k], p, dp, &bound);
      if (p.abs() <= noise * bound) {
        done[k] = true;
        continue;
      }
      all = false;
      const BigComplex ratio = p / dp;
      BigComplex s(precision);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += inv(z[k] - z[j]);
      z[k] -= ratio / (BigComplex(1L, precision) - ratio * s);
    }
    if (all) break;
  }
  if (it == kMaxAberthIterations) {
    std::ostringstream diag;
    diag << "degree " << d << ", precision " << precision;
    throw NumericFailure("Aberth iteration did not converge", diag.str());
  }
  for (auto& x : z) {
    for (int k = 0; k < 2; ++k) {
      horner(c, x, p, dp);
      if (p.is_zero() || dp.is_zero()) break;
      x -= p / dp;
    }
  }
  for (auto& x : z) x = x.rounded(target);
  std::sort(z.begin(), z.end(), root_less);
  return z;
}

BigFloat reconstruction_error(const std::vector<BigRat>& coeffs, const std::vector<BigComplex>& roots) {
  const long prec = roots.empty() ? BigFloat::kDefaultPrecision : roots[0].precision();
  std::vector<BigComplex> p{BigComplex(coeffs.back(), prec)};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(p.size() + 1, BigComplex(prec));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * r;
    }
    p = std::move(next);
  }
  BigFloat err(prec), scale(prec);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigComplex ck(coeffs[k], prec);
    scale = max(scale, ck.abs());
    if (k < p.size()) err = max(err, (p[k] - ck).abs());
  }
  return err / scale;
}

BigComplex split_reflecting(const BigComplex& wt) {
  const long prec = wt.precision();
  const BigComplex two(2L, prec), disc = sqrt(wt * wt - BigComplex(4L, prec));
  BigComplex a = (wt + disc) / two, b = (wt - disc) / two;
  const BigFloat ma = a.abs(), mb = b.abs();
  if (ma > mb) return a;
  if (mb > ma) return b;
  return a.im() >= b.im() ? a : b;
}

BigComplex to_z(const BigComplex& w) {
  const long prec = w.precision();
  const BigComplex q = cq(1, prec);
  const BigComplex den = q * w - BigComplex(1L, prec);
  if (den.is_zero()) throw DomainError("to_z: pole at w = 1/q");
  return (q - w) / den;
}

BigComplex to_w(const BigComplex& z) {
  const long prec = z.precision();
  const BigComplex q = cq(1, prec);
  const BigComplex den = q * z + BigComplex(1L, prec);
  if (den.is_zero()) throw DomainError("to_w: pole at z = -1/q");
  return (z + q) / den;
}

std::vector<BigComplex> bethe_defects(Boundary b, const std::vector<BigComplex>& w, int L) {
  if (b == Boundary::kReflecting) return open_defects(w, BigFloat(), true, 2L * L);
  std::vector<BigComplex> out;
  if (w.empty()) return out;
  const long prec = w[0].precision();
  const BigComplex q2 = cq(2, prec), twist = b == Boundary::kTwisted ? cq(-2, prec) : BigComplex(1L, prec);
  for (std::size_t i = 0; i < w.size(); ++i) {
    BigComplex prod(1L, prec);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const BigComplex den = q2 * w[i] - w[j];
      if (den.is_zero()) throw DomainError("bethe_defects: pole");
      prod *= (w[i] - q2 * w[j]) / den;
    }
    out.push_back(pow(to_z(w[i]), static_cast<long>(L)) + twist * prod);
  }
  return out;
}

BigFloat bethe_residual(const RootSet& rs) {
  return max_abs(bethe_defects(rs.boundary, rs.independent(), rs.L), rs.precision);
}

RootSet solve_roots(const QPolynomial& qp, long precision) {
  if (precision < 64) throw DomainError("solve_roots: precision below 64 bits");
  RootSet rs;
  rs.boundary = qp.boundary;
  rs.n = qp.n;
  rs.L = qp.chain_length();
  rs.precision = precision;
  const auto coeffs = qp.poly().coeffs();
  auto roots = polynomial_roots(coeffs, precision);
  if (!roots.empty()) {
    const BigFloat err = reconstruction_error(coeffs, roots);
    if (err > tol_bits(20 - precision, precision))
      throw NumericFailure("solve_roots: reconstruction check failed", "error " + err.to_string(6));
  }
  if (qp.boundary == Boundary::kReflecting) {
    rs.wt = roots;
    for (const auto& x : roots) rs.w.push_back(split_reflecting(x));
    for (int i = 0; i < qp.n; ++i) rs.w.push_back(inv(rs.w[i]));
  } else {
    rs.w = std::move(roots);
  }
  rs.residual = bethe_residual(rs);
  return rs;
}

RootSet solve_reflecting_odd(int n, long precision, int steps) {
  RootSet rs = solve_roots(qfunc::elem_reflecting(n), precision);
  rs.L = 2 * n + 1;
  if (n == 0) {
    rs.residual = BigFloat(precision);
    return rs;
  }
  auto w = rs.independent();
  const BigFloat loose = tol_bits(-precision / 4, precision), strict = tol_bits(16 - precision, precision);
  for (int s = 1; s <= steps; ++s) {
    const BigFloat e = BigFloat(4L * n, precision) + BigFloat(2L * s, precision) / BigFloat(static_cast<long>(steps), precision);
    newton_open(w, e, false, 0, loose, 60);
  }
  newton_open(w, BigFloat(precision), true, 2L * rs.L, strict, 60);

  rs.wt.clear();
  rs.w.clear();
  for (const auto& x : w) rs.wt.push_back(x + inv(x));
  std::sort(rs.wt.begin(), rs.wt.end(), root_less);
  for (const auto& x : rs.wt) rs.w.push_back(split_reflecting(x));
  for (int i = 0; i < n; ++i) rs.w.push_back(inv(rs.w[i]));
  rs.residual = bethe_residual(rs);
  return rs;
}

RootSet solve_open_chain(int L, long precision) {
  if (L < 1) throw DomainError("solve_open_chain: L >= 1 required");
  if (L % 2 == 0) return solve_roots(qfunc::elem_reflecting(L / 2), precision);
  return solve_reflecting_odd(L / 2, precision);
}

BigComplex z_sum(const RootSet& rs) {
  BigComplex s(rs.precision);
  for (const auto& w : rs.independent()) {
    const BigComplex z = to_z(w);
    s += z + inv(z);
  }
  return s;
}

BigComplex energy(const RootSet& rs) {
  const long prec = rs.precision;
  const long len = rs.boundary == Boundary::kReflecting ? rs.L - 1 : rs.L;
  const BigComplex first(BigRat(len, 4), prec);
  return first - z_sum(rs) - BigComplex(static_cast<long>(rs.n), prec);
}

namespace {

BigComplex permutation_sum(const RootSet& rs, int power) {
  const auto w = rs.independent();
  const int n = static_cast<int>(w.size());
  if (n > kMaxPermutationN) throw SizeError("component sum: n exceeds the permutation guard");
  const long prec = rs.precision;
  const BigComplex q = cq(1, prec), qinv = cq(-1, prec), q2 = cq(2, prec), one(1L, prec);
  std::vector<std::vector<BigComplex>> pair(n, std::vector<BigComplex>(n, BigComplex(prec)));
  for (int a = 0; a < n; ++a) {
    BigComplex r = (q * w[a] - one) / (q - w[a]);
    if (power == 2) r *= r;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const BigComplex den = w[b] - w[a];
      if (den.is_zero()) throw SingularError("component sum: coincident roots");
      pair[a][b] = qinv * r * (w[a] - q2 * w[b]) / den;
    }
  }
  // Depth-first over permutations with running prefix products.
  BigComplex total(prec);
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, const BigComplex& acc) -> void {
    if (static_cast<int>(perm.size()) == n) {
      total += acc;
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      BigComplex next = acc;
      for (int a : perm) next *= pair[a][b];
      used[b] = true;
      perm.push_back(b);
      self(self, next);
      perm.pop_back();
      used[b] = false;
    }
  };
  rec(rec, one);
  return total;
}

}  // namespace

BigComplex component_sum_small(const RootSet& rs) { return permutation_sum(rs, 1); }
BigComplex component_sum_large(const RootSet& rs) { return permutation_sum(rs, 2); }

BigComplex wavefunction_component(const RootSet& rs, const std::vector<int>& positions) {
  const auto w = rs.independent();
  const int n = static_cast<int>(w.size());
  if (static_cast<int>(positions.size()) != n) throw ShapeError("wavefunction_component: need one position per root");
  for (int i = 0; i < n; ++i) {
    if (positions[i] < 1 || positions[i] > rs.L || (i > 0 && positions[i] <= positions[i - 1]))
      throw DomainError("wavefunction_component: positions must increase within 1..L");
  }
  const long prec = rs.precision;
  const BigComplex q = cq(1, prec), q2 = cq(2, prec), one(1L, prec);
  std::vector<BigComplex> z;
  for (const auto& x : w) z.push_back(to_z(x));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigComplex total(prec);

  if (rs.boundary != Boundary::kReflecting) {
    if (n > kMaxPermutationN) throw SizeError("wavefunction_component: n exceeds the permutation guard");
    do {
      BigComplex term = one;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) term *= (w[perm[i]] - q2 * w[perm[j]]) / (w[perm[i]] - w[perm[j]]);
      for (int j = 0; j < n; ++j) term *= pow(z[perm[j]], static_cast<long>(positions[j]));
      total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }

  if (n > 5) throw SizeError("wavefunction_component: open chain limited to n <= 5");
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto sg = [&](int i) { return (mask >> i) & 1u ? -1L : 1L; };
      BigComplex term = one;
      for (int i = 0; i < n; ++i) {
        const BigComplex& zi = z[perm[i]];
        const BigComplex zs = pow(zi, sg(i)), zm = pow(zi, -sg(i));
        term *= pow(zi, -sg(i) * rs.L) * (one + q * zm) / (zs - zm);
      }
      for (int i = 0; i < n; ++i) {
        for (int l = i + 1; l < n; ++l) {
          const BigComplex &a = w[perm[i]], &b = w[perm[l]];
          term *= (q2 * pow(a, -sg(i)) - pow(b, -sg(l))) * (q2 - pow(a, sg(i)) * pow(b, sg(l)));
          term /= (a - b) * (one - inv(a * b));
        }
      }
      for (int j = 0; j < n; ++j) term *= pow(z[perm[j]], sg(j) * positions[j]);
      total += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BigComplex reflecting_double_product(const RootSet& rs) {
  if (rs.boundary != Boundary::kReflecting) throw DomainError("reflecting_double_product: reflecting root set required");
  const int m = 2 * rs.n;
  const long prec = rs.precision;
  std::vector<BigComplex> z;
  for (const auto& x : rs.w) z.push_back(to_z(x));
  BigComplex prod(1L, prec);
  const BigComplex one(1L, prec);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j == i || j == i + rs.n || j == i - rs.n) continue;
      prod *= one + z[i] + z[i] * z[j];
    }
  }
  return prod;
}

BigComplex double_product(const RootSet& rs) {
  const long prec = rs.precision;
  std::vector<BigComplex> z;
  for (const auto& x : rs.independent()) z.push_back(to_z(x));
  BigComplex prod(1L, prec);
  const BigComplex one(1L, prec);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      if (i != j) prod *= one + z[i] + z[i] * z[j];
  return prod;
}

BigComplex staircase_schur_numeric(const RootSet& rs) {
  const auto w = rs.independent();
  BigComplex prod(1L, rs.precision);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) prod *= w[i] * w[i] + w[i] * w[j] + w[j] * w[j];
  return prod;
}

}  // namespace numeric
}  // namespace xxz
