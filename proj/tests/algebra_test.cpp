#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcops/algebra.hpp"

using namespace arcops;

TEST_CASE("dual numbers: pairing, Casimir, coproduct, Euler element") {
  GradedAlgebra A = alg_dual_numbers();
  CHECK(verify_frobenius(A).ok);
  FrobeniusData fd = frobenius_data(A);
  CHECK(fd.eta[0][0] == Rat(0));
  CHECK(fd.eta[0][1] == Rat(1));
  CHECK(fd.eta[1][0] == Rat(1));
  CHECK(fd.eta[1][1] == Rat(0));
  // C = 1 (x) x + x (x) 1
  CHECK(fd.eta_inv[0][1] == Rat(1));
  CHECK(fd.eta_inv[1][0] == Rat(1));
  CHECK(fd.eta_inv[0][0] == Rat(0));
  // Delta(1) = C
  CHECK(fd.coproduct_of_unit == fd.eta_inv);
  // e = 2x
  CHECK(fd.euler == Vec{Rat(0), Rat(2)});
}

TEST_CASE("trivial algebra: C = (1/int 1) 1 (x) 1") {
  GradedAlgebra A = alg_trivial(Rat(3));
  FrobeniusData fd = frobenius_data(A);
  CHECK(fd.eta_inv[0][0] == Rat(1, 3));
  CHECK(fd.euler == Vec{Rat(1, 3)});
}

TEST_CASE("group algebra of Z/2 verifies") {
  GradedAlgebra A = alg_group_z2();
  CHECK(verify_frobenius(A).ok);
  FrobeniusData fd = frobenius_data(A);
  CHECK(fd.eta[0][0] == Rat(1));
  CHECK(fd.eta[1][1] == Rat(1));
  CHECK(fd.eta[0][1] == Rat(0));
  // e = dim A . 1 here: mu(1x1 + sxs) = 1 + s^2 = 2
  CHECK(fd.euler == Vec{Rat(2), Rat(0)});
}

TEST_CASE("Frobenius compatibility of the coproduct") {
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    int n = A.dim();
    // (id (x) mu)(Delta (x) id) = Delta o mu on basis pairs
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Mat lhs(n, Vec(n, Rat(0)));
        Mat da = coproduct(A, A.basis_vec(a));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (da[i][j].is_zero()) continue;
            Vec m = A.mul(A.basis_vec(j), A.basis_vec(b));
            for (int k = 0; k < n; ++k) lhs[i][k] += da[i][j] * m[k];
          }
        Mat rhs = coproduct(A, A.mul(A.basis_vec(a), A.basis_vec(b)));
        CHECK(lhs == rhs);
        Mat lhs2(n, Vec(n, Rat(0)));
        Mat db = coproduct(A, A.basis_vec(b));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (db[i][j].is_zero()) continue;
            Vec m = A.mul(A.basis_vec(a), A.basis_vec(i));
            for (int k = 0; k < n; ++k) lhs2[k][j] += db[i][j] * m[k];
          }
        CHECK(lhs2 == rhs);
      }
  }
}

TEST_CASE("Casimir contracted with the pairing is the identity") {
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    FrobeniusData fd = frobenius_data(A);
    int n = A.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat s(0);
        for (int k = 0; k < n; ++k) s += fd.eta[i][k] * fd.eta_inv[k][j];
        CHECK(s == Rat(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("transfer identity in a commutative Frobenius algebra") {
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    Vec e = euler_element(A);
    int n = A.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          Rat lhs = A.integrate(A.mul(
              A.mul(e, A.basis_vec(a)),
              A.mul(A.basis_vec(b), A.basis_vec(c))));
          Rat rhs = A.integrate(A.mul(
              A.mul(A.basis_vec(a), A.basis_vec(b)),
              A.mul(e, A.basis_vec(c))));
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("quasi-Frobenius example: homology is two dimensional") {
  GradedAlgebra A = alg_quasi_frobenius();
  CHECK(verify_frobenius(A).ok);
  HomologySection H = homology(A);
  CHECK(H.h_basis.size() == 2);
  CHECK(H.z_basis.size() == 3);
  // projection kills boundaries: [y] = 0
  Vec y = A.basis_vec(2);
  Vec py = project_cycle(A, H, y);
  for (const Rat& c : py) CHECK(c.is_zero());
  // projection respects the section
  for (int i = 0; i < 2; ++i) {
    Vec p = project_cycle(A, H, H.h_basis[i]);
    for (int j = 0; j < 2; ++j) CHECK(p[j] == Rat(i == j ? 1 : 0));
  }
  // d-pairing identity on basis pairs
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Rat lhs = A.pair(A.d(A.basis_vec(i)), A.basis_vec(j));
      Rat rhs = A.pair(A.basis_vec(i), A.d(A.basis_vec(j)));
      int sign = A.degrees[i] % 2 ? -1 : 1;
      CHECK((lhs + Rat(sign) * rhs).is_zero());
    }
}

TEST_CASE("d = 0 gives H = A with the identity section") {
  GradedAlgebra A = alg_dual_numbers();
  HomologySection H = homology(A);
  CHECK(H.h_basis.size() == 2);
}

TEST_CASE("non-example rejected: integral not killing d") {
  GradedAlgebra A = alg_quasi_frobenius();
  A.integral[2] = Rat(5); // int(y) != 0 but y = du
  auto rep = verify_frobenius(A);
  CHECK(!rep.ok);
}

TEST_CASE("algebra json round-trip") {
  for (const GradedAlgebra& A :
       {alg_dual_numbers(), alg_group_z2(), alg_quasi_frobenius()}) {
    std::string s = algebra_to_json(A);
    GradedAlgebra B = algebra_from_json(s);
    CHECK(algebra_to_json(B) == s);
    CHECK(B.dim() == A.dim());
    CHECK(B.mul_table == A.mul_table);
    CHECK(B.integral == A.integral);
  }
}
