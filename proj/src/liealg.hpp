#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxtk {

/// Thrown on invalid parameters (bad type/rank, inconsistent inputs).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails during a computation.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

/// Combinatorial data of a simple Lie algebra: Cartan matrix, marks,
/// Coxeter number and exponents.
struct CartanDatum {
  Family family;
  int rank = 0;
  Eigen::MatrixXi cartan;         // cartan(i,j) = <alpha_i, alpha_j^vee>
  std::vector<int> marks;         // coefficients of the highest root
  int coxeter_number = 0;         // s = 1 + sum of marks
  std::vector<int> exponents;     // n_1 <= ... <= n_l
};

/// A root in simple-root coordinates (integer vector of length rank).
using RootCoords = Eigen::VectorXi;

/// Ordered type-A label (i,j) for the root x_i - x_j, 0 <= i != j <= n.
struct TypeALabel {
  int i = 0;
  int j = 0;
  friend bool operator==(const TypeALabel&, const TypeALabel&) = default;
};

struct RootSystem {
  CartanDatum datum;
  std::vector<RootCoords> roots;  // sorted by (height, lex); fixed order
  RootCoords highest_root;
  Eigen::MatrixXd gram;           // (alpha_i, alpha_j); long roots have length^2 = 2

  int rank() const { return datum.rank; }
  int coxeter_number() const { return datum.coxeter_number; }

  /// Index of a root in `roots`, or nullopt.
  std::optional<int> find_root(const RootCoords& c) const;

  /// Type A only: label <-> coordinate conversions.
  TypeALabel label_of(const RootCoords& c) const;
  RootCoords coords_of(const TypeALabel& lab) const;
};

struct CoxeterElement {
  std::vector<int> ordering;   // reflections applied in this order (0-based)
  Eigen::MatrixXd matrix;      // action on simple-root coordinates
  std::vector<int> root_perm;  // index permutation of rs.roots
};

bool valid_type(Family family, int rank);

RootSystem build_root_system(Family family, int rank);

/// Coxeter element for a given application order of the simple reflections.
/// Default ordering is r_{alpha_1}, r_{alpha_2}, ..., r_{alpha_l}.
CoxeterElement coxeter_element(const RootSystem& rs, const std::vector<int>& ordering);
CoxeterElement coxeter_element(const RootSystem& rs);

/// Partition of root indices into Coxeter orbits, ordered by smallest
/// contained root index. Each orbit lists indices in cycle order starting
/// from the smallest.
std::vector<std::vector<int>> coxeter_orbits(const CoxeterElement& ce, const RootSystem& rs);

double inner_product(const RootSystem& rs, const RootCoords& a, const RootCoords& b);

/// Bipartition of the simple roots by 2-coloring the Dynkin diagram.
/// Node 0 (alpha_1) goes to Pi2.
struct BlackWhite {
  std::vector<int> pi1;  // simple-root indices, 0-based
  std::vector<int> pi2;
};
BlackWhite blackwhite_decomposition(const RootSystem& rs);

}  // namespace coxtk
