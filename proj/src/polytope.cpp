#include "polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace coxtk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeTol = 1e-9;

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

WeightSet wedge_weights(int n, int k) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  if (k < 1 || k > n) throw InvalidArgument("wedge power must satisfy 1 <= k <= n");
  WeightSet ws;
  ws.n = n;
  ws.rep = WeightSet::Rep::Wedge;
  ws.power = k;
  std::vector<std::vector<int>> subs;
  subsets(n, k, subs);
  for (const auto& s : subs) {
    Eigen::VectorXi w = Eigen::VectorXi::Zero(n + 1);
    for (int i : s) w[i] = 1;
    ws.weights.push_back(w);
  }
  return ws;
}

WeightSet symmetric_weights(int k) {
  if (k < 1) throw InvalidArgument("symmetric power must be >= 1");
  WeightSet ws;
  ws.n = 1;
  ws.rep = WeightSet::Rep::Symmetric;
  ws.power = k;
  for (int j = 0; j <= k; ++j) {
    Eigen::VectorXi w(2);
    w << k - j, j;
    ws.weights.push_back(w);
  }
  return ws;
}

VacuumDiagram project_weights(const WeightSet& ws) {
  const int n = ws.n;
  VacuumDiagram vd;
  vd.n = n;
  for (const auto& w : ws.weights) {
    std::complex<double> z = 0;
    for (int i = 0; i <= n; ++i)
      z -= double(w[i]) * std::polar(1.0, 2 * kPi * i / (n + 1));
    vd.positions.push_back(z);
  }
  // Merge coincident projections.
  const int nw = int(vd.positions.size());
  std::vector<int> point_of(nw, -1);
  for (int i = 0; i < nw; ++i) {
    if (point_of[i] >= 0) continue;
    point_of[i] = int(vd.merged_points.size());
    vd.merged_points.push_back({i});
    for (int j = i + 1; j < nw; ++j) {
      if (point_of[j] < 0 && std::abs(vd.positions[i] - vd.positions[j]) < kMergeTol) {
        point_of[j] = point_of[i];
        vd.merged_points.back().push_back(j);
      }
    }
  }
  return vd;
}

VacuumDiagram soliton_graph(const WeightSet& ws, const std::vector<double>* stokes) {
  const int n = ws.n;
  VacuumDiagram vd = project_weights(ws);
  if (stokes && int(stokes->size()) != n)
    throw InvalidArgument("stokes numbers must have n entries");

  std::vector<int> point_of(ws.weights.size());
  for (size_t p = 0; p < vd.merged_points.size(); ++p)
    for (int i : vd.merged_points[p]) point_of[i] = int(p);

  // (point pair, wheel) -> drawn segment dedup
  std::set<std::tuple<int, int, int>> segments;
  std::map<int, int> seg_count_by_wheel;

  const int nw = int(ws.weights.size());
  for (int a = 0; a < nw; ++a) {
    for (int b = a + 1; b < nw; ++b) {
      Eigen::VectorXi diff = ws.weights[a] - ws.weights[b];
      int plus = -1, minus = -1;
      bool is_root = true;
      for (int t = 0; t <= n && is_root; ++t) {
        if (diff[t] == 1 && plus < 0) plus = t;
        else if (diff[t] == -1 && minus < 0) minus = t;
        else if (diff[t] != 0) is_root = false;
      }
      if (!is_root || plus < 0 || minus < 0) continue;
      // lambda_a - lambda_b = x_plus - x_minus, a root of class (plus, minus)
      Soliton sol;
      sol.a = a;
      sol.b = b;
      sol.root = {plus, minus};
      int d = ((minus - plus) % (n + 1) + (n + 1)) % (n + 1);
      sol.orbit_id = d;
      sol.mass = 2 * std::sin(d * kPi / (n + 1));
      if (n % 2 == 0) sol.antiparticle = TypeALabel{minus, plus};  // n+1 odd
      int wheel = std::min(d, n + 1 - d);
      if (stokes) sol.multiplicity = (*stokes)[d - 1];
      vd.solitons.push_back(sol);

      int pa = point_of[a], pb = point_of[b];
      if (pa != pb) {
        auto key = std::make_tuple(std::min(pa, pb), std::max(pa, pb), wheel);
        if (segments.insert(key).second) seg_count_by_wheel[wheel] += 1;
      }
    }
  }
  for (const auto& [wheel, count] : seg_count_by_wheel)
    vd.segment_groups.push_back({2 * std::sin(wheel * kPi / (n + 1)), count});
  return vd;
}

WPlane w_plane(int n, int k, std::complex<double> z) {
  if (n < 1 || k < 1 || k > n) throw InvalidArgument("need 1 <= k <= n");
  if (std::abs(z) == 0) throw InvalidArgument("z must be nonzero");
  WPlane wp;
  wp.n = n;
  wp.k = k;
  wp.z = z;
  std::complex<double> base = std::pow(z, 1.0 / (n + 1));
  std::vector<std::complex<double>> roots(n + 1);
  for (int r = 0; r <= n; ++r) roots[r] = base * std::polar(1.0, 2 * kPi * r / (n + 1));
  std::vector<std::vector<int>> subs;
  subsets(n, k, subs);
  for (const auto& s : subs) {
    std::complex<double> w = 0;
    for (int r : s) w += std::pow(roots[r], n + 2) / double(n + 2) - z * roots[r];
    wp.critical_values.push_back(w);
  }
  return wp;
}

WPlaneFit compare_w_plane(const WPlane& wp, const VacuumDiagram& vd) {
  if (wp.critical_values.size() != vd.positions.size())
    throw InvalidArgument("W-plane and vacuum diagram have different sizes");
  std::complex<double> num = 0;
  double den = 0;
  for (size_t i = 0; i < vd.positions.size(); ++i) {
    num += std::conj(vd.positions[i]) * wp.critical_values[i];
    den += std::norm(vd.positions[i]);
  }
  WPlaneFit fit;
  fit.scalar = num / den;
  double res2 = 0;
  for (size_t i = 0; i < vd.positions.size(); ++i)
    res2 += std::norm(wp.critical_values[i] - fit.scalar * vd.positions[i]);
  fit.residual = std::sqrt(res2);
  return fit;
}

}  // namespace coxtk
