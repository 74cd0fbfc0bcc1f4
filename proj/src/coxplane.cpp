#include "coxplane.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace coxtk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMergeTol = 1e-9;

double canonical_angle(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0) a += 2 * kPi;
  if (a >= 2 * kPi) a -= 2 * kPi;
  return a;
}

// Union-find.
struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Merge coincident projections and build rays, orbit projections and the
// rotation step. `proj` holds one complex value per root index.
void assemble(CoxeterPlaneDiagram& d, const std::vector<std::complex<double>>& proj) {
  const int nroots = int(proj.size());
  DSU dsu(nroots);
  for (int i = 0; i < nroots; ++i)
    for (int j = i + 1; j < nroots; ++j)
      if (std::abs(proj[i] - proj[j]) < kMergeTol) dsu.unite(i, j);

  std::map<int, int> rep_to_point;
  for (int i = 0; i < nroots; ++i) {
    int r = dsu.find(i);
    auto [it, fresh] = rep_to_point.try_emplace(r, int(d.points.size()));
    if (fresh) d.points.push_back(PlanePoint{proj[i], {}, {}});
    d.points[it->second].labels.push_back(i);
  }
  for (auto& p : d.points) {
    if (std::abs(p.z) < kMergeTol) throw ComputationError("root projects to the origin");
  }

  // Orbit membership per point.
  std::vector<int> orbit_of_root(nroots, -1);
  for (size_t o = 0; o < d.orbits.size(); ++o)
    for (int idx : d.orbits[o]) orbit_of_root[idx] = int(o);
  for (auto& p : d.points) {
    std::set<int> ids;
    for (int idx : p.labels) ids.insert(orbit_of_root[idx]);
    p.orbit_ids.assign(ids.begin(), ids.end());
  }

  // Rays: distinct point angles, clustered, sorted ascending.
  std::vector<double> angles;
  for (const auto& p : d.points) angles.push_back(canonical_angle(p.z));
  std::sort(angles.begin(), angles.end());
  std::vector<double> rays;
  for (double a : angles) {
    if (rays.empty() || a - rays.back() > 1e-8) rays.push_back(a);
  }
  // wrap-around cluster (angles near 2*pi belong with the ray at 0)
  if (rays.size() > 1 && 2 * kPi - rays.back() + rays.front() < 1e-8) rays.pop_back();
  d.rays = rays;

  // Orbit projections.
  for (size_t o = 0; o < d.orbits.size(); ++o) {
    CoxeterPlaneDiagram::OrbitProjection op;
    std::set<int> pts;
    double rsum = 0;
    for (int idx : d.orbits[o]) {
      int p = d.point_of_root(idx);
      pts.insert(p);
      rsum += std::abs(proj[idx]);
    }
    op.radius = rsum / double(d.orbits[o].size());
    for (int idx : d.orbits[o]) {
      if (std::abs(std::abs(proj[idx]) - op.radius) > 1e-8)
        throw ComputationError("orbit radius is not constant");
    }
    op.point_indices.assign(pts.begin(), pts.end());
    d.orbit_projections[int(o)] = std::move(op);
  }

  // Rotation step of gamma on the plane.
  const int s = d.rs.coxeter_number();
  int r0 = 0;
  int r1 = d.ce.root_perm[r0];
  double delta = canonical_angle(proj[r1] / proj[r0]);
  double step = 2 * kPi / s;
  if (std::abs(delta - step) < 1e-6) {
    d.rotation_step = step;
  } else if (std::abs(delta - (2 * kPi - step)) < 1e-6) {
    d.rotation_step = -step;
  } else if (s == 2) {
    d.rotation_step = -kPi;
  } else {
    throw ComputationError("Coxeter element does not rotate the plane by 2*pi/s");
  }
}

}  // namespace

int CoxeterPlaneDiagram::point_of_root(int root_index) const {
  for (size_t p = 0; p < points.size(); ++p)
    for (int idx : points[p].labels)
      if (idx == root_index) return int(p);
  throw InvalidArgument("root index out of range");
}

int CoxeterPlaneDiagram::ray_of_angle(double angle) const {
  double a = canonical_angle(std::polar(1.0, angle));
  for (size_t i = 0; i < rays.size(); ++i) {
    double diff = std::abs(a - rays[i]);
    diff = std::min(diff, 2 * kPi - diff);
    if (diff < 1e-8) return int(i);
  }
  return -1;
}

CoxeterPlaneDiagram plane_type_a(int n, const std::vector<int>& ordering) {
  if (n < 1) throw InvalidArgument("type A requires rank >= 1");
  CoxeterPlaneDiagram d;
  d.rs = build_root_system(Family::A, n);
  d.ce = coxeter_element(d.rs, ordering);
  d.orbits = coxeter_orbits(d.ce, d.rs);
  std::vector<std::complex<double>> proj(d.rs.roots.size());
  for (size_t idx = 0; idx < d.rs.roots.size(); ++idx) {
    TypeALabel lab = d.rs.label_of(d.rs.roots[idx]);
    // ij(-E_+) = omega^j - omega^i
    proj[idx] = std::polar(1.0, 2 * kPi * lab.j / (n + 1)) -
                std::polar(1.0, 2 * kPi * lab.i / (n + 1));
  }
  assemble(d, proj);
  return d;
}

CoxeterPlaneDiagram plane_type_a(int n) {
  std::vector<int> ordering(n);
  std::iota(ordering.begin(), ordering.end(), 0);
  return plane_type_a(n, ordering);
}

CoxeterPlaneDiagram plane_general(const RootSystem& rs, const CoxeterElement& ce) {
  const int l = rs.rank();
  const int s = rs.coxeter_number();
  CoxeterPlaneDiagram d;
  d.rs = rs;
  d.ce = ce;
  d.orbits = coxeter_orbits(ce, rs);

  Eigen::EigenSolver<Eigen::MatrixXd> es(ce.matrix);
  std::complex<double> target = std::polar(1.0, 2 * kPi / s);
  int best = 0;
  double bestd = std::abs(es.eigenvalues()[0] - target);
  for (int i = 1; i < l; ++i) {
    double dist = std::abs(es.eigenvalues()[i] - target);
    if (dist < bestd) { bestd = dist; best = i; }
  }
  if (bestd > 1e-8) throw ComputationError("eigenvalue e^{2*pi*i/s} not found");
  Eigen::VectorXd a = es.eigenvectors().col(best).real();
  Eigen::VectorXd b = es.eigenvectors().col(best).imag();
  if (b.norm() < 1e-12) throw ComputationError("degenerate Coxeter eigenvector");

  // Gram-orthonormal frame of span{a, b}.
  auto bdot = [&](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return u.dot(rs.gram * v);
  };
  Eigen::VectorXd u1 = a / std::sqrt(bdot(a, a));
  Eigen::VectorXd u2 = b - bdot(b, u1) * u1;
  double n2 = std::sqrt(bdot(u2, u2));
  if (n2 < 1e-12) throw ComputationError("degenerate Coxeter eigenplane");
  u2 /= n2;

  std::vector<std::complex<double>> proj(rs.roots.size());
  for (size_t idx = 0; idx < rs.roots.size(); ++idx) {
    Eigen::VectorXd c = rs.roots[idx].cast<double>();
    proj[idx] = {bdot(c, u1), bdot(c, u2)};
  }
  // Rotate so the lexicographically smallest root lands on the positive
  // real axis; roots are sorted, so that is roots[0].
  std::complex<double> phase = std::polar(1.0, -std::arg(proj[0]));
  for (auto& z : proj) z *= phase;

  assemble(d, proj);
  return d;
}

std::map<int, double> masses(const CoxeterPlaneDiagram& d) {
  std::map<int, double> m;
  for (const auto& [id, op] : d.orbit_projections) m[id] = op.radius;
  return m;
}

namespace {

std::vector<int> rays_in_order(const CoxeterPlaneDiagram& d, int first_ray, int count) {
  const int nrays = int(d.rays.size());
  if (first_ray < 0 || first_ray >= nrays) throw InvalidArgument("ray index out of range");
  int dir = d.rotation_step < 0 ? -1 : 1;
  std::vector<int> order;
  for (int k = 0; k < count; ++k) order.push_back(((first_ray + dir * k) % nrays + nrays) % nrays);
  return order;
}

std::vector<int> roots_on_ray(const CoxeterPlaneDiagram& d, int ray) {
  std::vector<int> out;
  for (const auto& p : d.points) {
    double a = canonical_angle(p.z);
    double diff = std::abs(a - d.rays[ray]);
    diff = std::min(diff, 2 * kPi - diff);
    if (diff < 1e-8) out.insert(out.end(), p.labels.begin(), p.labels.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RaySelection positive_ray_selection(const CoxeterPlaneDiagram& d, int first_ray) {
  const int s = d.rs.coxeter_number();
  const int l = d.rs.rank();
  RaySelection sel;
  if (l == 1) {
    // Degenerate diagram: two antipodal points, one root per ray.
    sel.ray_indices = {first_ray};
    sel.positive_roots = roots_on_ray(d, first_ray);
    sel.simple_roots = sel.positive_roots;
    return sel;
  }
  sel.ray_indices = rays_in_order(d, first_ray, s);
  for (int r : sel.ray_indices) {
    auto on = roots_on_ray(d, r);
    sel.positive_roots.insert(sel.positive_roots.end(), on.begin(), on.end());
  }
  if (int(sel.positive_roots.size()) != l * s / 2)
    throw ComputationError("positive ray selection does not contain l*s/2 roots");
  auto first = roots_on_ray(d, sel.ray_indices.front());
  auto last = roots_on_ray(d, sel.ray_indices.back());
  sel.simple_roots = first;
  sel.simple_roots.insert(sel.simple_roots.end(), last.begin(), last.end());
  if (int(sel.simple_roots.size()) != l)
    throw ComputationError("extremal rays do not carry l roots");

  // Base check: every positive root is a nonnegative integer combination
  // of the extremal-ray roots.
  Eigen::MatrixXd S(l, l);
  for (int j = 0; j < l; ++j) S.col(j) = d.rs.roots[sel.simple_roots[j]].cast<double>();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(S);
  if (!lu.isInvertible()) throw ComputationError("extremal-ray roots are not independent");
  for (int idx : sel.positive_roots) {
    Eigen::VectorXd x = lu.solve(d.rs.roots[idx].cast<double>());
    for (int j = 0; j < l; ++j) {
      double r = std::round(x[j]);
      if (std::abs(x[j] - r) > 1e-8 || r < -1e-8)
        throw ComputationError("selected simple roots do not form a base");
    }
  }
  return sel;
}

std::vector<int> fundamental_domain(const CoxeterPlaneDiagram& d, int first_ray) {
  const int s = d.rs.coxeter_number();
  const bool degenerate = d.rs.rank() == 1;  // single orbit, one root per ray
  auto order = rays_in_order(d, first_ray, degenerate ? 1 : 2);
  std::vector<int> domain = roots_on_ray(d, order.front());
  if (order.size() > 1) {
    auto second = roots_on_ray(d, order[1]);
    domain.insert(domain.end(), second.begin(), second.end());
  }
  if (int(domain.size()) != d.rs.rank())
    throw ComputationError("fundamental domain does not contain l roots");

  // Tiling check: powers of gamma applied to the domain cover every root once.
  std::vector<int> hits(d.rs.roots.size(), 0);
  for (int idx : domain) {
    int j = idx;
    for (int k = 0; k < s; ++k) {
      hits[j] += 1;
      j = d.ce.root_perm[j];
    }
  }
  for (int h : hits)
    if (h != 1) throw ComputationError("fundamental domain does not tile the root set");
  return domain;
}

double ith_plane_spin(int n, int i, const TypeALabel& root) {
  if (n < 1) throw InvalidArgument("type A requires rank >= 1");
  if (i < 1 || i > n) throw InvalidArgument("plane index must satisfy 1 <= i <= n");
  if (root.i < 0 || root.j < 0 || root.i > n || root.j > n || root.i == root.j)
    throw InvalidArgument("invalid type-A root label");
  return std::abs(std::polar(1.0, 2 * kPi * double(i) * root.j / (n + 1)) -
                  std::polar(1.0, 2 * kPi * double(i) * root.i / (n + 1)));
}

}  // namespace coxtk
