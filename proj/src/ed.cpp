#include "xxz/ed/ed.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "xxz/errors.hpp"

namespace xxz::ed {
namespace {

constexpr double kDelta = -0.5;
using cd = std::complex<double>;

int sz(std::uint32_t s, int site) { return 1 - 2 * static_cast<int>((s >> site) & 1u); }

}  // namespace

SpinBasis::SpinBasis(int L, int n) : L_(L), n_(n) {
  if (L < 1 || L > kMaxSites) throw SizeError("SpinBasis: 1 <= L <= 16 required");
  if (n < 0 || n > L) throw DomainError("SpinBasis: sector out of range");
  for (std::uint32_t s = 0; s < (1u << L); ++s) {
    if (std::popcount(s) == n) {
      index_.emplace(s, states_.size());
      states_.push_back(s);
    }
  }
}

std::vector<int> SpinBasis::positions(std::size_t i) const {
  std::vector<int> out;
  for (int k = 0; k < L_; ++k)
    if ((states_[i] >> k) & 1u) out.push_back(k + 1);
  return out;
}

Matrix build_hamiltonian(const SpinBasis& basis, Boundary b) {
  const int L = basis.sites();
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Matrix h = Matrix::Zero(dim, dim);
  const int bonds = b == Boundary::kReflecting ? L - 1 : (L > 1 ? L : 0);
  const double ang = 2.0 * std::numbers::pi / 3.0;
  const cd q = std::polar(1.0, std::numbers::pi / 3.0);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::uint32_t s = basis.state(static_cast<std::size_t>(i));
    for (int a = 0; a < bonds; ++a) {
      const int c = (a + 1) % L;
      const int sa = sz(s, a), sc = sz(s, c);
      h(i, i) += -0.5 * kDelta * sa * sc;
      if (sa == sc) continue;
      const std::uint32_t t = s ^ (1u << a) ^ (1u << c);
      cd amp = -1.0;
      if (b == Boundary::kTwisted && c == 0) {
        // the down spin crosses the seam from site L to site 1, or back
        amp *= std::polar(1.0, ((s >> a) & 1u) ? ang : -ang);
      }
      h(static_cast<Eigen::Index>(basis.index(t)), i) += amp;
    }
    if (b == Boundary::kReflecting) h(i, i) += -0.25 * (q - 1.0 / q) * static_cast<double>(sz(s, 0) - sz(s, L - 1));
  }
  return h;
}

Matrix translation(const SpinBasis& basis) {
  const int L = basis.sites();
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  Matrix t = Matrix::Zero(dim, dim);
  const std::uint32_t mask = (1u << L) - 1u;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::uint32_t s = basis.state(static_cast<std::size_t>(i));
    const std::uint32_t r = ((s << 1) | (s >> (L - 1))) & mask;
    t(static_cast<Eigen::Index>(basis.index(r)), i) = 1.0;
  }
  return t;
}

Eigen::VectorXcd spectrum(const Matrix& h) {
  Eigen::ComplexEigenSolver<Matrix> es(h, false);
  if (es.info() != Eigen::Success) throw NumericFailure("spectrum: eigensolver failed");
  return es.eigenvalues();
}

double spectrum_imag_defect(const Eigen::VectorXcd& ev, double radius) {
  std::vector<bool> used(static_cast<std::size_t>(ev.size()), false);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    cd sum = 0.0;
    int count = 0;
    for (Eigen::Index j = i; j < ev.size(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(ev[j] - ev[i]) < radius) {
        used[static_cast<std::size_t>(j)] = true;
        sum += ev[j];
        ++count;
      }
    }
    worst = std::max(worst, std::abs((sum / static_cast<double>(count)).imag()));
  }
  return worst;
}

Groundstate groundstate(const Matrix& h, std::optional<double> shift_hint) {
  const Eigen::Index dim = h.rows();
  if (dim == 0) throw DomainError("groundstate: empty sector");
  double shift;
  if (shift_hint) {
    shift = *shift_hint - 1e-3;
  } else {
    if (dim > 4000) throw SizeError("groundstate: dimension too large without an energy hint");
    const auto ev = spectrum(h);
    double lo = ev[0].real();
    for (Eigen::Index k = 1; k < ev.size(); ++k) lo = std::min(lo, ev[k].real());
    shift = lo - 1e-3;
  }

  for (int attempt = 0; attempt < 4; ++attempt) {
    const Matrix shifted = h - cd(shift, 0.0) * Matrix::Identity(dim, dim);
    const Eigen::PartialPivLU<Matrix> lu(shifted);
    Vector v = Vector::Ones(dim) / std::sqrt(static_cast<double>(dim));
    cd lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
      v = lu.solve(v);
      if (!v.allFinite() || v.norm() == 0.0) break;  // singular at the shift
      v.normalize();
      const Vector hv = h * v;
      lambda = v.dot(hv);
      if ((hv - lambda * v).norm() < 1e-12 * std::max(1.0, std::abs(lambda))) {
        Eigen::Index k = 0;
        v.cwiseAbs().minCoeff(&k);
        return {lambda, v / v[k]};
      }
    }
    shift -= 1e-4 * (attempt + 1);
  }
  throw NumericFailure("groundstate: inverse iteration did not converge");
}

RsObservables rs_observables(const Vector& v) {
  const Eigen::VectorXd a = v.cwiseAbs();
  return {a.maxCoeff() / a.minCoeff(), v.sum(), v.cwiseProduct(v).sum()};
}

}  // namespace xxz::ed
