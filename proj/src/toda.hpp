#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "connection.hpp"
#include "liealg.hpp"

namespace coxtk {

/// Radial tt*-Toda connection problem for sl_{n+1}:
///   w_i'' + w_i'/x = 2 [ e^{-2(w_i - w_{i+1})} - e^{-2(w_{i-1} - w_i)} ],
/// indices mod n+1, with w_i ~ -m_i log x at 0 and w -> 0 at infinity.
struct TodaProblem {
  int n = 1;
  AsymptoticData m;
  double x_min = 1e-3;
  double x_max = 10.0;   // <= 0 selects max(10/L_1, 10)
  int nodes = 2000;
  double tolerance = 1e-11;
  int max_iterations = 50;

  void validate() const;
  double effective_x_max() const;
  bool degenerate() const;  // some m_{i-1} - m_i == -1 (k_i == -1)
};

struct TodaSolution {
  TodaProblem problem;
  std::vector<double> x;                  // log-uniform grid
  std::vector<Eigen::VectorXd> w;         // per node, n+1 components, trace zero
  double residual_norm = 0;
  bool converged = false;
  int iterations = 0;
};

struct UVFit {
  std::vector<double> m_hat;
  std::vector<double> fit_error;  // per-component regression residual
};

struct IRFit {
  std::vector<double> s_hat;      // k = 1..floor((n+1)/2)
  std::vector<double> fit_error;  // relative, per k
  double window_lo = 0;
  double window_hi = 0;
};

/// Discretized equation residual at every node for given samples
/// (boundary rows excluded; interior central differences on log grid).
std::vector<Eigen::VectorXd> residual(const TodaProblem& p, const std::vector<Eigen::VectorXd>& w);

/// Pointwise residual of the smooth equation for analytically given w, w', w''.
Eigen::VectorXd residual_pointwise(int n, double x, const Eigen::VectorXd& w,
                                   const Eigen::VectorXd& wp, const Eigen::VectorXd& wpp);

TodaSolution solve_connection(const TodaProblem& p);

/// Slopes of w_i against -log x over the smallest decade of the grid.
UVFit extract_uv(const TodaSolution& sol);

/// Least-squares fit of c_k(x) against s_k F(L_k x) on the far-field window.
IRFit extract_ir(const TodaSolution& sol);

/// F(x) = (1/2) (pi x)^{-1/2} e^{-2x}.
double ir_profile(double x);

struct CorrespondenceReport {
  int n = 1;
  std::vector<double> k;
  double N = 0;
  AsymptoticData m;
  std::vector<double> s_predicted;  // from the closed formula
  TodaSolution solution;
  UVFit uv;
  IRFit ir;
  double max_uv_error = 0;  // |m_hat - m| max
  double max_ir_error = 0;  // relative error of s_hat vs prediction
  bool pass = false;
};

/// Full UV -> solve -> IR pipeline with tolerances uv_tol (absolute) and
/// ir_tol (relative, against the closed-form Stokes numbers).
CorrespondenceReport verify_correspondence(int n, const std::vector<double>& k,
                                           const TodaProblem& base, double uv_tol = 0.02,
                                           double ir_tol = 0.05);

/// Analytic Jacobian of the discretized system (reduced variables); used by
/// the Newton iteration and exposed for finite-difference checks.
Eigen::SparseMatrix<double> toda_jacobian(const TodaProblem& p, const Eigen::VectorXd& v);
Eigen::VectorXd toda_system(const TodaProblem& p, const Eigen::VectorXd& v);
Eigen::VectorXd initial_guess(const TodaProblem& p);
std::vector<Eigen::VectorXd> unpack_state(const TodaProblem& p, const Eigen::VectorXd& v);

}  // namespace coxtk
