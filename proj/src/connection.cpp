#include "connection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace coxtk {

namespace {

constexpr double kPi = std::numbers::pi;

double canonical_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  if (2 * kPi - a < 1e-12) a = 0;
  return a;
}

// Eigenvalue arguments of M = e^{2 pi i (m + x_0)/(n+1)} with
// x_0 = diag(n/2, n/2-1, ..., -n/2): entries e^{(2 m_j + n - 2j) pi i/(n+1)}.
std::vector<std::complex<double>> spectral_points(const AsymptoticData& m) {
  const int n = m.n();
  std::vector<std::complex<double>> pts(n + 1);
  for (int j = 0; j <= n; ++j)
    pts[j] = std::polar(1.0, (2 * m.m[j] + n - 2 * j) * kPi / (n + 1));
  return pts;
}

std::vector<double> realize(const std::vector<std::complex<double>>& sigma) {
  std::vector<double> out;
  out.reserve(sigma.size());
  for (auto v : sigma) {
    if (std::abs(v.imag()) >= 1e-10)
      throw ComputationError("Stokes number has nonzero imaginary part");
    out.push_back(v.real());
  }
  return out;
}

}  // namespace

AsymptoticData asymptotic_from_k(int n, const std::vector<double>& k) {
  if (int(k.size()) != n + 1) throw InvalidArgument("k must have n+1 entries");
  double N = n + 1 + std::accumulate(k.begin(), k.end(), 0.0);
  if (N <= 0) throw InvalidArgument("N = n+1+sum(k) must be positive");
  AsymptoticData m;
  m.m.assign(n + 1, 0.0);
  // m_{i-1} - m_i = ((n+1)/N)(k_i+1) - 1, then shift to trace zero.
  for (int i = 1; i <= n; ++i) {
    double diff = double(n + 1) / N * (k[i] + 1) - 1;
    m.m[i] = m.m[i - 1] - diff;
  }
  double mean = std::accumulate(m.m.begin(), m.m.end(), 0.0) / (n + 1);
  for (double& v : m.m) v -= mean;
  return m;
}

OmegaHat build_omega_hat(const UVData& uv) {
  const int n = uv.n;
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (int(uv.c.size()) != n + 1 || int(uv.k.size()) != n + 1)
    throw InvalidArgument("c and k must have n+1 entries");
  for (double ci : uv.c)
    if (!(ci > 0)) throw InvalidArgument("all c_i must be positive");
  if (std::abs(uv.z) == 0) throw InvalidArgument("z must be nonzero");

  OmegaHat oh;
  oh.N = n + 1 + std::accumulate(uv.k.begin(), uv.k.end(), 0.0);
  if (oh.N <= 0) throw InvalidArgument("N = n+1+sum(k) must be positive");

  // e_{-alpha_i} = E_{i,i-1} for i=1..n; e_{-alpha_0} = E_{0,n}.
  oh.eta = ComplexMatrix::Zero(n + 1, n + 1);
  oh.eta(0, n) = uv.c[0] * std::pow(uv.z, uv.k[0]);
  for (int i = 1; i <= n; ++i) oh.eta(i, i - 1) = uv.c[i] * std::pow(uv.z, uv.k[i]);

  oh.m = asymptotic_from_k(n, uv.k);
  oh.m_matrix = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) oh.m_matrix(i, i) = oh.m.m[i];
  return oh;
}

StokesSpectrum stokes_sectors(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  StokesSpectrum sp;
  sp.n = n;
  sp.sector_width = kPi / 2 + kPi / (n + 1);
  // Arguments of omega^j - omega^i over all i != j; for n >= 2 these are
  // 2(n+1) values spaced pi/(n+1).
  std::vector<double> angles;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      std::complex<double> z = std::polar(1.0, 2 * kPi * j / (n + 1)) -
                               std::polar(1.0, 2 * kPi * i / (n + 1));
      angles.push_back(canonical_angle(std::arg(z)));
    }
  }
  std::sort(angles.begin(), angles.end());
  for (double a : angles) {
    if (sp.boundary_angles.empty() || a - sp.boundary_angles.back() > 1e-9)
      sp.boundary_angles.push_back(a);
  }
  return sp;
}

std::vector<TypeALabel> stokes_factor_support(int n, double ray_angle) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  double target = canonical_angle(ray_angle);
  std::vector<TypeALabel> out;
  bool on_ray = false;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      std::complex<double> z = std::polar(1.0, 2 * kPi * j / (n + 1)) -
                               std::polar(1.0, 2 * kPi * i / (n + 1));
      double a = canonical_angle(std::arg(z));
      double diff = std::abs(a - target);
      diff = std::min(diff, 2 * kPi - diff);
      if (diff < 1e-9) {
        out.push_back({i, j});
        on_ray = true;
      }
    }
  }
  if (!on_ray) throw InvalidArgument("angle is not a Stokes ray");
  return out;
}

std::vector<double> stokes_numbers(const AsymptoticData& m) {
  const int n = m.n();
  if (n < 1) throw InvalidArgument("m must have at least 2 entries");
  double trace = std::accumulate(m.m.begin(), m.m.end(), 0.0);
  if (std::abs(trace) > 1e-9) throw InvalidArgument("m must be trace-zero");
  auto pts = spectral_points(m);
  // Elementary symmetric functions via prod (x + a_j) coefficient expansion.
  std::vector<std::complex<double>> e(n + 2, 0.0);
  e[0] = 1.0;
  for (int j = 0; j <= n; ++j)
    for (int i = j + 1; i >= 1; --i) e[i] += e[i - 1] * pts[j];
  return realize({e.begin() + 1, e.begin() + 1 + n});
}

std::vector<double> character_crosscheck(const AsymptoticData& m) {
  const int n = m.n();
  auto pts = spectral_points(m);
  // Trace of the i-th exterior power: sum over i-subsets of eigenvalue products.
  std::vector<std::complex<double>> chi(n, 0.0);
  std::vector<int> idx;
  auto recurse = [&](auto&& self, int start) -> void {
    int size = int(idx.size());
    if (size >= 1 && size <= n) {
      std::complex<double> prod = 1.0;
      for (int t : idx) prod *= pts[t];
      chi[size - 1] += prod;
    }
    if (size == n) return;
    for (int t = start; t <= n; ++t) {
      idx.push_back(t);
      self(self, t + 1);
      idx.pop_back();
    }
  };
  recurse(recurse, 0);
  return realize(chi);
}

std::complex<double> t_from_z(const UVData& uv, double c_agg) {
  if (!(c_agg > 0)) throw InvalidArgument("c must be positive");
  if (std::abs(uv.z) == 0) throw InvalidArgument("z must be nonzero");
  double s = uv.n + 1;
  double N = uv.n + 1 + std::accumulate(uv.k.begin(), uv.k.end(), 0.0);
  if (N <= 0) throw InvalidArgument("N must be positive");
  return s / N * std::pow(c_agg, 1.0 / s) * std::pow(uv.z, std::complex<double>(N / s, 0.0));
}

VandermondeFrame vandermonde_frame(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  VandermondeFrame f;
  f.n = n;
  f.Omega = ComplexMatrix(n + 1, n + 1);
  f.d = ComplexMatrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    f.d(j, j) = std::polar(1.0, 2 * kPi * j / (n + 1));
    for (int k = 0; k <= n; ++k) f.Omega(j, k) = std::polar(1.0, 2 * kPi * j * k / (n + 1));
  }
  return f;
}

ComplexMatrix conjugated_root_vector(int n, int i, int j) {
  if (i < 0 || j < 0 || i > n || j > n || i == j)
    throw InvalidArgument("need 0 <= i != j <= n");
  ComplexMatrix out(n + 1, n + 1);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      out(a, b) = std::polar(1.0 / (n + 1), 2 * kPi * double(i * a - j * b) / (n + 1));
  return out;
}

}  // namespace coxtk
