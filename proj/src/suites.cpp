#include "xxz/conj/suites.hpp"

#include <algorithm>
#include <random>

#include "xxz/asmnum/asm_numbers.hpp"
#include "xxz/detlab/asm.hpp"
#include "xxz/detlab/determinant.hpp"
#include "xxz/symfunc/partition.hpp"
#include "xxz/symfunc/symfunc.hpp"

namespace xxz::suites {
namespace {

void expect(SuiteResult& r, bool cond, const std::string& what) {
  ++r.checks;
  if (!cond) r.failures.push_back(what);
}

BigRat random_rat(std::mt19937& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (;;) {
    BigRat x(num(rng), den(rng));
    if (!nonzero || x != 0) return x;
  }
}

}  // namespace

SuiteResult symfunc_cross_identities(std::uint32_t seed, int trials, int max_weight, int max_parts) {
  SuiteResult r;
  r.name = "symfunc cross-identities";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nv(3, 6);
  const int depth = 2 * max_weight + 2;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = nv(rng);
    std::vector<BigRat> vars;
    while (static_cast<int>(vars.size()) < n) {
      BigRat x = random_rat(rng, false);
      if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
    }
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    const auto e = symfunc::elem_brute<BigRat>(vars);
    const auto h = symfunc::complete_table(e, static_cast<std::size_t>(depth));

    // generating functions at a random t
    const BigRat t = random_rat(rng, true);
    BigRat et(0), prod(1), tk(1);
    for (long k = 0; k <= n; ++k, tk *= t) et += e.at(k) * tk;
    for (const auto& x : vars) prod *= 1 + x * t;
    expect(r, et == prod, tag + "E(t) = prod(1 + x t)");
    for (long k = 1; k <= depth; ++k) {
      BigRat s(0);
      for (long i = 0; i <= k; ++i) s += (i % 2 ? BigRat(-1) : BigRat(1)) * e.at(i) * h.at(k - i);
      expect(r, s == 0, tag + "E(t)H(-t) coefficient " + std::to_string(k));
    }
    for (long k = 1; k <= max_weight; ++k) {
      expect(r, symfunc::elem_from_complete(h, k) == e.at(k), tag + "e from h, k = " + std::to_string(k));
      expect(r, symfunc::complete_from_elem(e, k) == h.at(k), tag + "h from e, k = " + std::to_string(k));
    }

    for (int k = 0; k <= max_weight; ++k) {
      for (const auto& p : symfunc::partitions_of(k, max_parts)) {
        const std::string pt = tag + p.to_string() + " ";
        const BigRat s = symfunc::schur_tableaux<BigRat>(p, vars);
        expect(r, s == symfunc::schur_vandermonde<BigRat>(p, vars), pt + "tableaux vs bialternant");
        expect(r, s == symfunc::schur_nk(p, e), pt + "tableaux vs NK");
        expect(r, s == symfunc::schur_jt(p, h), pt + "tableaux vs JT");
        expect(r, symfunc::schur_nk(p, h) == symfunc::schur_tableaux<BigRat>(p.conjugate(), vars), pt + "involution");
      }
    }
  }
  return r;
}

SuiteResult lambda_det_suite(std::uint32_t seed, int trials) {
  SuiteResult r;
  r.name = "lambda-determinant";
  std::mt19937 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    ExactMatrix<BigRat> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rat(rng, true);
    const BigRat lam = random_rat(rng, true);
    const std::string tag = "trial " + std::to_string(trial) + ": ";
    try {
      expect(r, detlab::lambda_det_dodgson(m, lam) == detlab::lambda_det_asm_sum(m, lam), tag + "Dodgson vs ASM sum");
      expect(r, detlab::lambda_det_dodgson(m, BigRat(-1)) == detlab::det_exact(m), tag + "lambda = -1 vs det");
    } catch (const detlab::CondensationSingular&) {
      // a vanishing interior minor; the ASM side still gives lambda = -1 as det
      expect(r, detlab::lambda_det_asm_sum(m, BigRat(-1)) == detlab::det_exact(m), tag + "ASM sum at -1 vs det");
    }
  }
  for (int n = 0; n <= 6; ++n) {
    expect(r, detlab::asm_enumerate(static_cast<std::size_t>(n)).size() == asmnum::asm_count(n),
           "|ASM_" + std::to_string(n) + "|");
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigRat> w;
    while (static_cast<int>(w.size()) < n) {
      BigRat x = random_rat(rng, true);
      if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
    }
    const BigRat lam = random_rat(rng, true);
    const auto un = static_cast<std::size_t>(n);
    ExactMatrix<BigRat> v(un, un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) v(i, j) = exact::ipow(w[i], static_cast<unsigned long>(un - 1 - j));
    BigRat prod(1);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = i + 1; j < un; ++j) prod *= w[i] + lam * w[j];
    expect(r, detlab::lambda_det_asm_sum(v, lam) == prod, "Vandermonde product n = " + std::to_string(n));
    try {
      expect(r, detlab::lambda_det_dodgson(v, lam) == prod, "Vandermonde by condensation n = " + std::to_string(n));
    } catch (const detlab::CondensationSingular&) {
    }
  }
  return r;
}

}  // namespace xxz::suites
