#pragma once

#include <complex>
#include <map>
#include <vector>

#include "liealg.hpp"

namespace coxtk {

struct PlanePoint {
  std::complex<double> z;
  std::vector<int> labels;     // root indices projecting here
  std::vector<int> orbit_ids;  // Coxeter orbits represented here
};

struct CoxeterPlaneDiagram {
  RootSystem rs;
  CoxeterElement ce;
  std::vector<std::vector<int>> orbits;  // from coxeter_orbits
  std::vector<PlanePoint> points;
  std::vector<double> rays;  // 2s angles in [0, 2*pi), sorted
  // orbit id -> (radius, point indices)
  struct OrbitProjection {
    double radius = 0;
    std::vector<int> point_indices;
  };
  std::map<int, OrbitProjection> orbit_projections;
  // Rotation step of the Coxeter element on this plane: -2*pi/s or +2*pi/s.
  double rotation_step = 0;

  int point_of_root(int root_index) const;
  int ray_of_angle(double angle) const;  // -1 if not on a ray
};

/// Exact type-A Coxeter Plane via the apposition formula:
/// root (i,j) projects to omega^j - omega^i, omega = e^{2*pi*i/(n+1)}.
CoxeterPlaneDiagram plane_type_a(int n, const std::vector<int>& ordering);
CoxeterPlaneDiagram plane_type_a(int n);

/// General types: orthogonal projection of the roots onto the
/// gamma-eigenplane for e^{2*pi*i/s}, in the gram inner product.
CoxeterPlaneDiagram plane_general(const RootSystem& rs, const CoxeterElement& ce);

/// Radius of each orbit's projection.
std::map<int, double> masses(const CoxeterPlaneDiagram& d);

/// Roots on the s consecutive rays starting at ray index `first_ray` and
/// proceeding in the Coxeter rotation direction.
struct RaySelection {
  std::vector<int> ray_indices;     // s entries, in traversal order
  std::vector<int> positive_roots;  // root indices, l*s/2 of them
  std::vector<int> simple_roots;    // roots on the two extremal rays, l of them
};
RaySelection positive_ray_selection(const CoxeterPlaneDiagram& d, int first_ray);

/// Roots on the first and second positive rays: Pi2 u gamma.(-Pi1).
/// Verified to tile the root set under powers of gamma.
std::vector<int> fundamental_domain(const CoxeterPlaneDiagram& d, int first_ray);

/// Type A only: length of the projection of root (a,b) onto the i-th
/// Coxeter plane, |omega^{ib} - omega^{ia}|.
double ith_plane_spin(int n, int i, const TypeALabel& root);

}  // namespace coxtk
