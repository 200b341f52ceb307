#include "xxz/qfunc/qfunctions.hpp"

#include <stdexcept>

#include "xxz/exact/ring.hpp"

namespace xxz {

using exact::gen_binom;

std::string_view to_string(Boundary b) {
  switch (b) {
    case Boundary::kPeriodic:
      return "periodic";
    case Boundary::kTwisted:
      return "twisted";
    case Boundary::kReflecting:
      return "reflecting";
  }
  return "?";
}

Boundary parse_boundary(std::string_view text) {
  if (text == "periodic") return Boundary::kPeriodic;
  if (text == "twisted") return Boundary::kTwisted;
  if (text == "reflecting" || text == "open") return Boundary::kReflecting;
  throw std::invalid_argument("unknown boundary '" + std::string(text) + "'");
}

UniPoly<BigRat> QPolynomial::poly() const {
  std::vector<BigRat> c(evalues.size());
  for (std::size_t l = 0; l < evalues.size(); ++l) {
    // coefficient of x^{n-l}
    c[evalues.size() - 1 - l] = (l % 2 == 0) ? evalues[l] : BigRat(-evalues[l]);
  }
  return UniPoly<BigRat>(std::move(c));
}

int QPolynomial::chain_length() const { return boundary == Boundary::kPeriodic ? 2 * n + 1 : 2 * n; }

namespace qfunc {
namespace {

const BigRat kThird(1, 3);
const BigRat kTwoThirds(2, 3);

BigRat br(long v) { return BigRat(v); }

void require_n(int n, int min, const char* who) {
  if (n < min) throw DomainError(std::string(who) + ": n = " + std::to_string(n) + " is below " + std::to_string(min));
}

}  // namespace

QPolynomial elem_periodic(int n) {
  require_n(n, 0, "elem_periodic");
  if (n == 0) return {Boundary::kPeriodic, 0, {BigRat(1)}};
  const BigRat a = br(n) - kThird, b = br(n) + kThird;
  const BigRat c = gen_binom(a, n);
  std::vector<BigRat> e;
  for (int l = 0; l <= n; ++l) {
    BigRat s = 0;
    for (int p = 0; p <= l / 3; ++p) {
      s += gen_binom(br(2 * n - 3 * p + l), 2 * n) * gen_binom(a, n - p) * gen_binom(b, p);
      s -= gen_binom(br(2 * n - 3 * p + l - 1), 2 * n) * gen_binom(a, p) * gen_binom(b, n - p);
    }
    e.push_back(s / c);
  }
  return {Boundary::kPeriodic, n, std::move(e)};
}

QPolynomial elem_twisted(int n) {
  require_n(n, 1, "elem_twisted");
  const BigRat a = br(n) - kThird, b = br(n) - kTwoThirds;
  const BigRat c = gen_binom(a, n);
  std::vector<BigRat> e;
  for (int l = 0; l <= n; ++l) {
    BigRat s = 0;
    for (int p = 0; p <= l / 3 + 1; ++p) {
      s += gen_binom(br(2 * n - 3 * p + l - 1), 2 * n - 1) * gen_binom(a, n - p) * gen_binom(b, p);
      s -= gen_binom(br(2 * n - 3 * p + l + 1), 2 * n - 1) * gen_binom(a, p - 1) * gen_binom(b, n - p);
    }
    e.push_back(s / c);
  }
  return {Boundary::kTwisted, n, std::move(e)};
}

std::vector<BigRat> reflecting_triple_sum(int n, ReflectingReading reading) {
  require_n(n, 1, "reflecting_triple_sum");
  const BigRat up = br(2 * n) + kTwoThirds, dn = br(2 * n) - kTwoThirds;
  const BigRat c = gen_binom(dn, 2 * n);
  const bool corrected = reading == ReflectingReading::kCorrected;
  const BigRat& second = corrected ? dn : up;

  std::vector<BigRat> e;
  for (int p = 0; p <= n; ++p) {
    BigRat s = gen_binom(br(3 * n - p - 1), n - p) * gen_binom(up, n) * gen_binom(second, n);
    const int m_max = corrected ? n - p : p;
    for (int m = 0; m <= m_max; ++m) {
      for (int k = 1; k <= n; ++k) {
        if ((k + m) % 2 != 0) continue;  // (1 + (-1)^{k+m}) vanishes
        const BigRat sign = ((k + m + 1) / 2) % 2 == 0 ? BigRat(1) : BigRat(-1);
        const BigRat b_plus = gen_binom(br((3 * k + m + 1) / 2), m);
        const BigRat b_minus = reading == ReflectingReading::kPrintedSameBracket ? b_plus
                                                                                : gen_binom(br((3 * k + m - 1) / 2), m);
        const BigRat inner = gen_binom(up, n - k) * gen_binom(second, n + k) * b_plus +
                             gen_binom(up, n + k) * gen_binom(second, n - k) * b_minus;
        // 2^{m-1} (1 + (-1)^{k+m}) = 2^m here
        s += sign * exact::pow(BigRat(2), m) * gen_binom(br(3 * n - p - m - 1), 2 * n - 1) * inner;
      }
    }
    // coefficient of w~^{n-p} is 2^{-3n} (-2)^p s / c = (-1)^p e_p
    e.push_back(exact::pow(BigRat(2), p - 3 * n) * s / c);
  }
  return e;
}

QPolynomial elem_reflecting(int n) {
  return {Boundary::kReflecting, n, reflecting_triple_sum(n, ReflectingReading::kCorrected)};
}

QPolynomial elem_values(Boundary b, int n) {
  switch (b) {
    case Boundary::kPeriodic:
      return elem_periodic(n);
    case Boundary::kTwisted:
      return elem_twisted(n);
    case Boundary::kReflecting:
      return elem_reflecting(n);
  }
  throw std::invalid_argument("elem_values: bad boundary");
}

namespace {

template <class R>
R power(const R& x, long k) {
  if (k >= 0) return exact::ipow(x, static_cast<unsigned long>(k));
  return R(R(1) / exact::ipow(x, static_cast<unsigned long>(-k)));
}

}  // namespace

template <class R>
R q_rational_eval(Boundary b, int n, const R& w) {
  switch (b) {
    case Boundary::kPeriodic: {
      require_n(n, 0, "q_rational_eval");
      if (w == R(-1)) throw DomainError("q_rational_eval: pole at w = -1");
      const BigRat a = br(n) - kThird, bb = br(n) + kThird;
      const R sgn_n = n % 2 == 0 ? R(1) : R(-1);
      R sum(0);
      for (int k = 0; k <= n; ++k) {
        BigRat coef = gen_binom(a, k) * gen_binom(bb, n - k);
        if (k % 2) coef = -coef;
        sum = R(sum + R(coef) * R(sgn_n * power(w, 3 * k + 1) + power(w, 3 * n - 3 * k)));
      }
      return R(sum / (R(gen_binom(a, n)) * power(R(R(1) + w), 2 * n + 1)));
    }
    case Boundary::kTwisted: {
      require_n(n, 1, "q_rational_eval");
      if (w == R(-1)) throw DomainError("q_rational_eval: pole at w = -1");
      const BigRat a = br(n) - kThird, bb = br(n) - kTwoThirds;
      const R sgn_n = n % 2 == 0 ? R(1) : R(-1);
      R sum(0);
      for (int k = 0; k <= n; ++k) {
        BigRat coef = gen_binom(bb, n - k);
        if (k % 2) coef = -coef;
        const R inner = R(sgn_n * R(gen_binom(a, k)) * power(w, 3 * k) - R(gen_binom(a, k - 1)) * power(w, 3 * n - 3 * k + 2));
        sum = R(sum + R(coef) * inner);
      }
      return R(sum / (R(gen_binom(a, n)) * power(R(R(1) + w), 2 * n)));
    }
    case Boundary::kReflecting: {
      require_n(n, 1, "q_rational_eval");
      if (w == R(0) || w == R(1) || w == R(-1)) throw DomainError("q_rational_eval: pole at w in {0, 1, -1}");
      const BigRat up = br(2 * n) + kTwoThirds, dn = br(2 * n) - kTwoThirds;
      R sum(0);
      for (int k = -n; k <= n; ++k) {
        BigRat coef = gen_binom(up, n - k) * gen_binom(dn, n + k);
        if ((n + k) % 2 != 0) coef = -coef;
        sum = R(sum + R(coef) * R(power(w, 3 * k + 1) - power(w, -3 * k - 1)));
      }
      const R winv = R(R(1) / w);
      const R den = R(R(gen_binom(dn, 2 * n)) * R(w - winv) * power(R(R(2) + w + winv), 2 * n));
      return R(sum / den);
    }
  }
  throw std::invalid_argument("q_rational_eval: bad boundary");
}

template BigRat q_rational_eval<BigRat>(Boundary, int, const BigRat&);
template CycloQ q_rational_eval<CycloQ>(Boundary, int, const CycloQ&);

UniPoly<BigRat> recursion_next(int n) {
  require_n(n, 1, "recursion_next");
  using P = UniPoly<BigRat>;
  const P w_plus_1{BigRat(1), BigRat(1)};
  const P w3_minus_1{BigRat(-1), BigRat(0), BigRat(0), BigRat(1)};
  const P w2_w_1{BigRat(1), BigRat(-1), BigRat(1)};
  const P rhs = w3_minus_1 * elem_periodic(n).poly() * BigRat(3 * (2 * n + 1)) -
                w2_w_1 * w2_w_1 * elem_periodic(n - 1).poly() * BigRat(3 * n + 1);
  return exact::poly_div_exact(rhs, w_plus_1 * w_plus_1 * BigRat(3 * n + 2));
}

bool check_recursion_periodic(int n) {
  require_n(n, 1, "check_recursion_periodic");
  try {
    return recursion_next(n) == elem_periodic(n + 1).poly();
  } catch (const ExactnessError&) {
    return false;
  }
}

bool SpecialValues::ok() const {
  return q_at_zero == q_at_zero_expected && q2n_q_at_qinv == CycloQ(q2n_expected) &&
         corollary == CycloQ(corollary_expected);
}

SpecialValues special_values_periodic(int n) {
  require_n(n, 0, "special_values_periodic");
  SpecialValues sv;
  sv.q_at_zero = q_rational_eval<BigRat>(Boundary::kPeriodic, n, BigRat(0));
  sv.q_at_zero_expected = n % 2 == 0 ? 1 : -1;
  const CycloQ qinv = CycloQ::q_inv();
  const CycloQ at_qinv = q_rational_eval<CycloQ>(Boundary::kPeriodic, n, qinv);
  sv.q2n_q_at_qinv = exact::cyclo_pow(CycloQ::q(), 2 * n) * at_qinv;
  sv.q2n_expected = exact::pow(BigRat(2), n);
  sv.corollary_expected = exact::pow(BigRat(3, 4), n);
  for (int j = 1; j <= n; ++j) {
    sv.q2n_expected *= BigRat(2 * j - 1, 3 * j - 1);
    const BigRat r(3 * j - 1, 2 * j - 1);
    sv.corollary_expected *= r * r;
  }
  const BigRat e_n = elem_periodic(n).evalues.back();
  sv.corollary = exact::cyclo_pow(CycloQ(-3) * qinv, n) * CycloQ(e_n) / (at_qinv * at_qinv);
  return sv;
}

std::string_view to_string(HypIdentity h) {
  switch (h) {
    case HypIdentity::kHyp1:
      return "hyp1";
    case HypIdentity::kHyp2:
      return "hyp2";
    case HypIdentity::kHyp2AsPrinted:
      return "hyp2-as-printed";
  }
  return "?";
}

HypCheck verify_hyp_identity(HypIdentity which, int n, int s, exact::BinomialConvention convention) {
  require_n(n, 0, "verify_hyp_identity");
  auto bin = [&](const BigRat& a, long k) { return exact::binom(a, k, convention); };
  const BigRat a = br(n) - kThird;
  HypCheck out{BigRat(0), BigRat(0)};
  if (which == HypIdentity::kHyp1) {
    const BigRat b = br(n) + kThird;
    for (int p = 0; p <= n; ++p) {
      out.lhs += bin(br(3 * p - n + s), 2 * n) * bin(a, p) * bin(b, n - p);
      out.rhs += bin(br(3 * p - n + s - 1), 2 * n) * bin(a, n - p) * bin(b, p);
    }
  } else {
    const BigRat b = br(n) - kTwoThirds;
    const long lower = which == HypIdentity::kHyp2 ? 2 * n - 1 : 2 * n;
    for (int p = 0; p <= n; ++p) {
      out.lhs += bin(br(3 * p - n + s), lower) * bin(a, p) * bin(b, n - p);
      out.rhs += bin(br(3 * p - n + s + 2), lower) * bin(a, n - p - 1) * bin(b, p);
    }
  }
  return out;
}

UniPoly<BigRat> chebyshev_expand(int n) {
  require_n(n, 0, "chebyshev_expand");
  std::vector<BigRat> c(static_cast<std::size_t>(n) + 1, BigRat(0));
  for (int p = 0; 2 * p <= n; ++p) {
    BigRat v = gen_binom(br(n - p), p);
    if (p % 2) v = -v;
    c[static_cast<std::size_t>(n - 2 * p)] = v;
  }
  return UniPoly<BigRat>(std::move(c));
}

}  // namespace qfunc
}  // namespace xxz
