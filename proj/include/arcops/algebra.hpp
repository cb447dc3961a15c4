#ifndef ARCOPS_ALGEBRA_HPP
#define ARCOPS_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "arcops/rational.hpp"

namespace arcops {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

// Finite-dimensional graded unital algebra with an integral, given by exact
// rational structure constants; optionally a differential of degree +1.
struct GradedAlgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;
  int unit = 0;
  std::vector<Mat> mul_table; // mul_table[i][j][k]: e_i e_j = sum_k c_ijk e_k
  Vec integral;
  std::optional<Mat> diff; // d(e_j) = sum_i diff[i][j] e_i

  int dim() const { return (int)names.size(); }
  Vec unit_vec() const {
    Vec v(dim(), Rat(0));
    v[unit] = Rat(1);
    return v;
  }
  Vec mul(const Vec& a, const Vec& b) const;
  Rat integrate(const Vec& a) const;
  Rat pair(const Vec& a, const Vec& b) const { return integrate(mul(a, b)); }
  Vec d(const Vec& a) const;
  Vec basis_vec(int i) const {
    Vec v(dim(), Rat(0));
    v[i] = Rat(1);
    return v;
  }
  bool is_commutative() const;
};

struct FrobeniusData {
  Mat eta;       // eta[i][j] = integral(e_i e_j)
  Mat eta_inv;   // Casimir components: C = sum eta_inv[i][j] e_i (x) e_j
  Mat coproduct_of_unit; // = Casimir
  Vec euler;     // mu(Delta(1))
};

struct AlgebraReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(const std::string& s) {
    ok = false;
    violations.push_back(s);
  }
};

AlgebraReport verify_frobenius(const GradedAlgebra& A);
// throws std::domain_error on singular pairing
FrobeniusData frobenius_data(const GradedAlgebra& A);
// Sweedler components of Delta(a): matrix D with Delta(a) = sum D[i][j]
// e_i (x) e_j, the dual of multiplication under the pairing
Mat coproduct(const GradedAlgebra& A, const Vec& a);
Vec euler_element(const GradedAlgebra& A);

// homology of (A, d) with a reduced-echelon section
struct HomologySection {
  std::vector<Vec> h_basis;      // section: representatives in Z = ker d
  std::vector<int> h_degrees;
  std::vector<Vec> z_basis;      // kernel basis
  Mat h_eta;                     // induced pairing on H
  Mat h_eta_inv;
};
HomologySection homology(const GradedAlgebra& A);
Vec project_cycle(const GradedAlgebra& A, const HomologySection& H,
                  const Vec& z);

// exact linear algebra helpers
Mat mat_mul(const Mat& a, const Mat& b);
std::optional<Mat> mat_inverse(const Mat& m);
int mat_rank(Mat m);
std::vector<Vec> kernel_basis(const Mat& m);

// serialization per the algebra file format
std::string algebra_to_json(const GradedAlgebra& A);
GradedAlgebra algebra_from_json(const std::string& text);

// stock algebras used across suites and tests
GradedAlgebra alg_dual_numbers();   // k[x]/(x^2), |x| = 2, int(x) = 1
GradedAlgebra alg_group_z2();       // k[Z/2], int(a + b s) = a
GradedAlgebra alg_trivial(Rat unit_integral); // k with int(1) given
GradedAlgebra alg_quasi_frobenius(); // (1, u, y, uy), du = y

} // namespace arcops

#endif
