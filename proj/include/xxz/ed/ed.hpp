#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "xxz/qfunc/qfunctions.hpp"

namespace xxz::ed {

inline constexpr int kMaxSites = 16;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Fixed-magnetization basis. Bit k set means a down spin at site k+1;
/// states are in increasing integer order.
class SpinBasis {
 public:
  SpinBasis(int L, int n);

  int sites() const { return L_; }
  int sector() const { return n_; }
  std::size_t dimension() const { return states_.size(); }
  std::uint32_t state(std::size_t i) const { return states_[i]; }
  std::size_t index(std::uint32_t s) const { return index_.at(s); }
  /// 1-based down-spin positions of state i.
  std::vector<int> positions(std::size_t i) const;

 private:
  int L_;
  int n_;
  std::vector<std::uint32_t> states_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// H = -1/2 sum_j (sx sx + sy sy + Delta sz sz), Delta = -1/2, restricted to
/// the sector. Twisted: the seam bond carries e^{+-2 i pi/3}. Open: L-1 bonds
/// plus the boundary term -1/4 (q - 1/q)(sz_1 - sz_L). SizeError if L > kMaxSites.
Matrix build_hamiltonian(const SpinBasis& basis, Boundary b);

/// Cyclic shift by one site (site j -> j+1).
Matrix translation(const SpinBasis& basis);

struct Groundstate {
  std::complex<double> energy;
  /// Normalized so the smallest-magnitude component equals 1.
  Vector vector;
};

/// Lowest-real-part eigenpair by inverse iteration with dense LU at
/// shift_hint - 1e-3. Without a hint the spectrum is computed first
/// (dimension <= 4000, else SizeError).
Groundstate groundstate(const Matrix& h, std::optional<double> shift_hint = std::nullopt);

/// All eigenvalues (dense).
Eigen::VectorXcd spectrum(const Matrix& h);

/// max |Im| over the means of eigenvalue clusters of the given radius.
/// Defective eigenvalues split by about sqrt(eps) under rounding while
/// the cluster mean stays accurate, so reality is judged on the means.
double spectrum_imag_defect(const Eigen::VectorXcd& ev, double radius = 1e-5);

struct RsObservables {
  double ratio;
  std::complex<double> sum;
  std::complex<double> sum_sq;
};
RsObservables rs_observables(const Vector& v);

/// Sector of the groundstate: floor(L/2).
inline int groundstate_sector(int L) { return L / 2; }

}  // namespace xxz::ed
