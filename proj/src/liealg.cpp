#include "liealg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace coxtk {

namespace {

constexpr double kPi = std::numbers::pi;

// cartan(i,j) = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
Eigen::MatrixXi cartan_matrix(Family family, int l) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(l, l);
  for (int i = 0; i < l; ++i) a(i, i) = 2;
  auto chain = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case Family::B:  // alpha_l short
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      a(l - 2, l - 1) = -2;
      break;
    case Family::C:  // alpha_l long
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      a(l - 1, l - 2) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      chain(0, 2);
      for (int i = 2; i + 1 < l; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      a(1, 2) = -2;
      break;
    case Family::G:  // alpha_2 long
      chain(0, 1);
      a(1, 0) = -3;
      break;
  }
  return a;
}

int height(const RootCoords& c) { return c.sum(); }

bool lex_less(const RootCoords& a, const RootCoords& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool root_less(const RootCoords& a, const RootCoords& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return lex_less(a, b);
}

struct CoordsLess {
  bool operator()(const RootCoords& a, const RootCoords& b) const { return lex_less(a, b); }
};

// Simple reflection r_j acting on simple-root coordinates.
RootCoords reflect(const Eigen::MatrixXi& cartan, int j, const RootCoords& c) {
  RootCoords r = c;
  int pairing = 0;
  for (int k = 0; k < c.size(); ++k) pairing += c[k] * cartan(k, j);
  r[j] -= pairing;
  return r;
}

}  // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
    case 'F': case 'f': return Family::F;
    case 'G': case 'g': return Family::G;
    default:
      throw InvalidArgument(std::string("unknown family '") + c + "'");
  }
}

bool valid_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::optional<int> RootSystem::find_root(const RootCoords& c) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), c, root_less);
  if (it != roots.end() && *it == c) return int(it - roots.begin());
  return std::nullopt;
}

TypeALabel RootSystem::label_of(const RootCoords& c) const {
  if (datum.family != Family::A) throw InvalidArgument("labels are defined for type A only");
  const int n = rank();
  // Positive root alpha_{a+1}+...+alpha_b -> (a,b); negative -> (b,a).
  int sign = 0;
  for (int k = 0; k < n; ++k) {
    if (c[k] != 0) { sign = c[k] > 0 ? 1 : -1; break; }
  }
  if (sign == 0) throw InvalidArgument("zero vector is not a root");
  int a = -1, b = -1;
  for (int k = 0; k < n; ++k) {
    if (c[k] * sign == 1) {
      if (a < 0) a = k;
      b = k + 1;
    } else if (c[k] != 0) {
      throw InvalidArgument("not a type-A root");
    }
  }
  return sign > 0 ? TypeALabel{a, b} : TypeALabel{b, a};
}

RootCoords RootSystem::coords_of(const TypeALabel& lab) const {
  if (datum.family != Family::A) throw InvalidArgument("labels are defined for type A only");
  const int n = rank();
  if (lab.i < 0 || lab.j < 0 || lab.i > n || lab.j > n || lab.i == lab.j)
    throw InvalidArgument("invalid type-A label");
  RootCoords c = RootCoords::Zero(n);
  int lo = std::min(lab.i, lab.j), hi = std::max(lab.i, lab.j);
  int sign = lab.i < lab.j ? 1 : -1;
  for (int k = lo; k < hi; ++k) c[k] = sign;
  return c;
}

RootSystem build_root_system(Family family, int rank) {
  if (!valid_type(family, rank))
    throw InvalidArgument("invalid simple type " + std::string(1, char(family)) + "_" +
                          std::to_string(rank));
  const int l = rank;
  RootSystem rs;
  rs.datum.family = family;
  rs.datum.rank = l;
  rs.datum.cartan = cartan_matrix(family, l);

  // Close the simple roots under all simple reflections.
  std::set<RootCoords, CoordsLess> closed;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < l; ++i) {
    RootCoords e = RootCoords::Zero(l);
    e[i] = 1;
    closed.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const auto& c : frontier) {
      for (int j = 0; j < l; ++j) {
        RootCoords r = reflect(rs.datum.cartan, j, c);
        if (closed.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  rs.roots.assign(closed.begin(), closed.end());
  std::sort(rs.roots.begin(), rs.roots.end(), root_less);

  rs.highest_root = rs.roots.back();
  rs.datum.marks.assign(l, 0);
  for (int i = 0; i < l; ++i) rs.datum.marks[i] = rs.highest_root[i];
  rs.datum.coxeter_number = 1 + rs.highest_root.sum();

  // Symmetrize the Cartan matrix: gram(i,j) = cartan(i,j) * d_j with
  // cartan(i,j) d_j = cartan(j,i) d_i, scaled so long roots have length^2 2.
  std::vector<double> d(l, 0.0);
  d[0] = 1.0;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || rs.datum.cartan(i, j) == 0 || d[j] != 0.0) continue;
      d[j] = d[i] * double(rs.datum.cartan(j, i)) / double(rs.datum.cartan(i, j));
      queue.push_back(j);
    }
  }
  double dmax = *std::max_element(d.begin(), d.end());
  rs.gram.resize(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.gram(i, j) = rs.datum.cartan(i, j) * d[j] / dmax;

  // Exponents from the Coxeter-element eigenvalues.
  CoxeterElement ce = coxeter_element(rs);
  Eigen::EigenSolver<Eigen::MatrixXd> es(ce.matrix);
  const int s = rs.datum.coxeter_number;
  std::vector<int> exps;
  for (int i = 0; i < l; ++i) {
    double arg = std::arg(es.eigenvalues()[i]);
    if (arg < 0) arg += 2 * kPi;
    double raw = arg * s / (2 * kPi);
    int n = int(std::lround(raw));
    if (std::abs(raw - n) > 1e-6)
      throw ComputationError("Coxeter eigenvalue argument not a multiple of 2*pi/s");
    exps.push_back(n);
  }
  std::sort(exps.begin(), exps.end());
  rs.datum.exponents = exps;
  return rs;
}

CoxeterElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering) {
  const int l = rs.rank();
  if (int(ordering.size()) != l) throw InvalidArgument("ordering must be a permutation of 0..l-1");
  std::vector<bool> seen(l, false);
  for (int i : ordering) {
    if (i < 0 || i >= l || seen[i]) throw InvalidArgument("ordering must be a permutation of 0..l-1");
    seen[i] = true;
  }
  CoxeterElement ce;
  ce.ordering = ordering;
  // Matrix for r_j on simple-root coordinates: column k of the identity with
  // entry j replaced by -cartan(k,j).
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(l, l);
  for (int idx : ordering) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(l, l);
    for (int k = 0; k < l; ++k) r(idx, k) -= rs.datum.cartan(k, idx);
    m = r * m;  // reflections applied in listed order
  }
  ce.matrix = m;

  ce.root_perm.resize(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    Eigen::VectorXd img = m * rs.roots[i].cast<double>();
    RootCoords c(l);
    for (int k = 0; k < l; ++k) {
      double v = img[k];
      c[k] = int(std::lround(v));
      if (std::abs(v - c[k]) > 1e-9) throw ComputationError("non-integer Coxeter image");
    }
    auto j = rs.find_root(c);
    if (!j) throw ComputationError("Coxeter image is not a root");
    ce.root_perm[i] = *j;
  }
  return ce;
}

CoxeterElement coxeter_element(const RootSystem& rs) {
  std::vector<int> ordering(rs.rank());
  std::iota(ordering.begin(), ordering.end(), 0);
  return coxeter_element(rs, ordering);
}

std::vector<std::vector<int>> coxeter_orbits(const CoxeterElement& ce, const RootSystem& rs) {
  const int nroots = int(rs.roots.size());
  if (int(ce.root_perm.size()) != nroots) throw InvalidArgument("CoxeterElement does not match RootSystem");
  std::vector<bool> visited(nroots, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < nroots; ++i) {
    if (visited[i]) continue;
    std::vector<int> orbit;
    int j = i;
    do {
      visited[j] = true;
      orbit.push_back(j);
      j = ce.root_perm[j];
    } while (j != i);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

double inner_product(const RootSystem& rs, const RootCoords& a, const RootCoords& b) {
  return a.cast<double>().dot(rs.gram * b.cast<double>());
}

BlackWhite blackwhite_decomposition(const RootSystem& rs) {
  const int l = rs.rank();
  std::vector<int> color(l, -1);
  color[0] = 2;  // alpha_1 goes to Pi2
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || rs.datum.cartan(i, j) == 0) continue;
      if (color[j] == -1) {
        color[j] = color[i] == 2 ? 1 : 2;
        queue.push_back(j);
      } else if (color[j] == color[i]) {
        throw ComputationError("Dynkin diagram is not bipartite");
      }
    }
  }
  BlackWhite bw;
  for (int i = 0; i < l; ++i) (color[i] == 2 ? bw.pi2 : bw.pi1).push_back(i);
  return bw;
}

}  // namespace coxtk
