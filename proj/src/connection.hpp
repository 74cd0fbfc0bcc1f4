#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "liealg.hpp"

namespace coxtk {

using ComplexMatrix = Eigen::MatrixXcd;

/// UV parameters of the connection form for sl_{n+1}:
/// eta = sum c_i z^{k_i} e_{-alpha_i}, N = (n+1) + sum k_i.
struct UVData {
  int n = 1;
  std::vector<double> c;  // c_0..c_n, all positive
  std::vector<double> k;  // k_0..k_n
  std::complex<double> z{1.0, 0.0};
};

/// Trace-zero vector m = (m_0,...,m_n) of the lambda^{-1} coefficient.
struct AsymptoticData {
  std::vector<double> m;
  int n() const { return int(m.size()) - 1; }
};

struct StokesSpectrum {
  int n = 1;
  std::vector<double> boundary_angles;  // 2(n+1) angles in [0,2*pi), sorted
  double sector_width = 0;              // pi/2 + pi/(n+1)
  std::vector<double> s;                // s_1..s_n
};

struct OmegaHat {
  ComplexMatrix eta;        // (n+1)x(n+1)
  Eigen::MatrixXd m_matrix; // diag(m)
  AsymptoticData m;
  double N = 0;
};

/// m derived from the k_i: m_{i-1} - m_i = ((n+1)/N)(k_i+1) - 1, trace zero.
AsymptoticData asymptotic_from_k(int n, const std::vector<double>& k);

OmegaHat build_omega_hat(const UVData& uv);

/// Sector boundary angles (arguments of omega^j - omega^i) and width.
StokesSpectrum stokes_sectors(int n);

/// Apposition roots (i,j) on the given boundary ray, -E_+ convention.
std::vector<TypeALabel> stokes_factor_support(int n, double ray_angle);

/// Closed-form Stokes numbers:
/// s_i = sigma_i(e^{(2m_0+n) pi i/(n+1)}, ..., e^{(2m_n-n) pi i/(n+1)}).
std::vector<double> stokes_numbers(const AsymptoticData& m);

/// Independent route: s_i as the trace of the i-th exterior power of
/// M = e^{2 pi i (m + x_0)/(n+1)}, computed by subset enumeration.
std::vector<double> character_crosscheck(const AsymptoticData& m);

/// t = (s/N) c^{1/s} z^{N/s}, s = n+1, principal branches.
std::complex<double> t_from_z(const UVData& uv, double c_agg);

struct VandermondeFrame {
  int n;
  ComplexMatrix Omega;  // Omega(j,k) = omega^{jk}
  ComplexMatrix d;      // diag(1, omega, ..., omega^n)
};
VandermondeFrame vandermonde_frame(int n);

/// (1/(n+1)) d^i J d^{-j}, J the all-ones matrix; equals Omega E_{i,j} Omega^{-1}.
ComplexMatrix conjugated_root_vector(int n, int i, int j);

}  // namespace coxtk
