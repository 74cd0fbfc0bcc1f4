#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "coxplane.hpp"
#include "liealg.hpp"

namespace coxtk {

/// Weights of a representation of sl_{n+1} in x_0..x_n coordinates.
struct WeightSet {
  enum class Rep { Wedge, Symmetric, Explicit };
  int n = 1;
  Rep rep = Rep::Wedge;
  int power = 1;  // k for wedge^k or S^k
  std::vector<Eigen::VectorXi> weights;
};

struct Soliton {
  int a = 0;                 // weight indices
  int b = 0;
  TypeALabel root;           // representative root class (i,j)
  int orbit_id = -1;
  double mass = 0;
  std::optional<double> multiplicity;  // s-value of the orbit, if attached
  std::optional<TypeALabel> antiparticle;  // [ji] when distinct from [ij]
};

struct VacuumDiagram {
  int n = 1;
  std::vector<std::complex<double>> positions;       // one per weight
  std::vector<std::vector<int>> merged_points;       // weight indices per drawn point
  std::vector<Soliton> solitons;
  /// Drawn segments after projection, deduplicated by endpoint pair;
  /// grouped by soliton mass.
  struct SegmentGroup {
    double mass = 0;
    int segment_count = 0;
  };
  std::vector<SegmentGroup> segment_groups;
};

struct WPlane {
  int n = 1;
  int k = 1;
  std::complex<double> z{1.0, 0.0};
  std::vector<std::complex<double>> critical_values;  // binom(n+1,k), lex subset order
};

/// Weights of wedge^k of the standard representation, lexicographic subsets.
WeightSet wedge_weights(int n, int k);

/// Weights of S^k of the standard representation of sl_2.
WeightSet symmetric_weights(int k);

/// Project weights onto the Coxeter Plane: weight w maps to
/// w(-diag(1, omega, ..., omega^n)).
VacuumDiagram project_weights(const WeightSet& ws);

/// Connect weight pairs differing by a single root; annotate each soliton
/// with root class, Coxeter orbit, and mass. Optional Stokes numbers
/// (s_1..s_n indexed by wheel) attach multiplicities.
VacuumDiagram soliton_graph(const WeightSet& ws, const std::vector<double>* stokes = nullptr);

/// Critical values of W(u) = (1/(n+2)) sum u_j^{n+2} - z sum u_j over the
/// k-subsets of the (n+1)-th roots of z, by direct evaluation.
WPlane w_plane(int n, int k, std::complex<double> z);

/// Least-squares complex scalar c minimizing |critical_values - c*positions|.
struct WPlaneFit {
  std::complex<double> scalar;
  double residual = 0;
};
WPlaneFit compare_w_plane(const WPlane& wp, const VacuumDiagram& vd);

}  // namespace coxtk
