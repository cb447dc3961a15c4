#include "arcops/algebra.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace arcops {

Vec GradedAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      for (int k = 0; k < dim(); ++k)
        out[k] += a[i] * b[j] * mul_table[i][j][k];
    }
  }
  return out;
}

Rat GradedAlgebra::integrate(const Vec& a) const {
  Rat s(0);
  for (int i = 0; i < dim(); ++i) s += a[i] * integral[i];
  return s;
}

Vec GradedAlgebra::d(const Vec& a) const {
  if (!diff) throw std::domain_error("algebra has no differential");
  Vec out(dim(), Rat(0));
  for (int j = 0; j < dim(); ++j)
    for (int i = 0; i < dim(); ++i) out[i] += (*diff)[i][j] * a[j];
  return out;
}

bool GradedAlgebra::is_commutative() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (mul(basis_vec(i), basis_vec(j)) != mul(basis_vec(j), basis_vec(i)))
        return false;
  return true;
}

// ---- exact linear algebra ---------------------------------------------------

static void rref(Mat& m, std::vector<int>* pivots = nullptr) {
  int rows = (int)m.size();
  if (!rows) return;
  int cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    Rat inv = m[r][c].inv();
    for (int j = 0; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = (int)a.size(), m = (int)b[0].size(), k = (int)b.size();
  Mat out(n, Vec(m, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

std::optional<Mat> mat_inverse(const Mat& m) {
  int n = (int)m.size();
  Mat aug(n, Vec(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rat(1);
  }
  rref(aug);
  for (int i = 0; i < n; ++i)
    if (aug[i][i] != Rat(1)) return std::nullopt;
  Mat out(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

int mat_rank(Mat m) {
  std::vector<int> piv;
  rref(m, &piv);
  return (int)piv.size();
}

std::vector<Vec> kernel_basis(const Mat& m) {
  if (m.empty()) return {};
  Mat r = m;
  std::vector<int> piv;
  rref(r, &piv);
  int cols = (int)m[0].size();
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec> out;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = Rat(1);
    for (int i = 0; i < (int)piv.size(); ++i) v[piv[i]] = -r[i][c];
    out.push_back(v);
  }
  return out;
}

// ---- verification -----------------------------------------------------------

AlgebraReport verify_frobenius(const GradedAlgebra& A) {
  AlgebraReport rep;
  int n = A.dim();
  if ((int)A.degrees.size() != n || (int)A.integral.size() != n ||
      (int)A.mul_table.size() != n)
    throw std::invalid_argument("algebra tables have inconsistent sizes");
  // associativity
  for (int i = 0; i < n && rep.ok; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = A.mul(A.mul(A.basis_vec(i), A.basis_vec(j)), A.basis_vec(k));
        Vec rhs = A.mul(A.basis_vec(i), A.mul(A.basis_vec(j), A.basis_vec(k)));
        if (lhs != rhs) {
          rep.fail("associativity fails at (" + A.names[i] + "," + A.names[j] +
                   "," + A.names[k] + ")");
          break;
        }
      }
  // unit laws
  for (int i = 0; i < n; ++i) {
    if (A.mul(A.unit_vec(), A.basis_vec(i)) != A.basis_vec(i) ||
        A.mul(A.basis_vec(i), A.unit_vec()) != A.basis_vec(i))
      rep.fail("unit law fails at " + A.names[i]);
  }
  // degree additivity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!A.mul_table[i][j][k].is_zero() &&
            A.degrees[k] != A.degrees[i] + A.degrees[j])
          rep.fail("degree additivity fails at (" + A.names[i] + "," +
                   A.names[j] + ")");
  // graded trace symmetry
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat lhs = A.pair(A.basis_vec(i), A.basis_vec(j));
      Rat rhs = A.pair(A.basis_vec(j), A.basis_vec(i));
      int sign = (A.degrees[i] % 2 && A.degrees[j] % 2) ? -1 : 1;
      if (lhs != rhs * Rat(sign))
        rep.fail("graded trace symmetry fails at (" + A.names[i] + "," +
                 A.names[j] + ")");
    }
  if (A.diff) {
    const Mat& D = *A.diff;
    // degree +1
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!D[i][j].is_zero() && A.degrees[i] != A.degrees[j] + 1)
          rep.fail("differential is not of degree +1");
    // d^2 = 0
    Mat D2 = mat_mul(D, D);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!D2[i][j].is_zero()) rep.fail("d^2 != 0");
    // Leibniz
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = A.d(A.mul(A.basis_vec(i), A.basis_vec(j)));
        Vec rhs = A.mul(A.d(A.basis_vec(i)), A.basis_vec(j));
        Vec rhs2 = A.mul(A.basis_vec(i), A.d(A.basis_vec(j)));
        int sign = A.degrees[i] % 2 ? -1 : 1;
        for (int k = 0; k < n; ++k) rhs[k] += Rat(sign) * rhs2[k];
        if (lhs != rhs)
          rep.fail("Leibniz fails at (" + A.names[i] + "," + A.names[j] + ")");
      }
    // integral vanishes on exact elements
    for (int j = 0; j < n; ++j)
      if (!A.integrate(A.d(A.basis_vec(j))).is_zero())
        rep.fail("integral does not kill d(" + A.names[j] + ")");
  }
  return rep;
}

FrobeniusData frobenius_data(const GradedAlgebra& A) {
  FrobeniusData fd;
  int n = A.dim();
  fd.eta.assign(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fd.eta[i][j] = A.pair(A.basis_vec(i), A.basis_vec(j));
  auto inv = mat_inverse(fd.eta);
  if (!inv) throw std::domain_error("pairing is degenerate");
  fd.eta_inv = *inv;
  fd.coproduct_of_unit = coproduct(A, A.unit_vec());
  fd.euler = euler_element(A);
  return fd;
}

Mat coproduct(const GradedAlgebra& A, const Vec& a) {
  // <Delta(a), e_p (x) e_q> = <a, e_p e_q>; Delta(a)_{ij} solves
  // sum_{ij} D_ij eta_ip eta_jq = integral(a e_p e_q)
  int n = A.dim();
  FrobeniusData fd;
  fd.eta.assign(n, Vec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fd.eta[i][j] = A.pair(A.basis_vec(i), A.basis_vec(j));
  auto inv = mat_inverse(fd.eta);
  if (!inv) throw std::domain_error("pairing is degenerate");
  const Mat& ei = *inv;
  Mat rhs(n, Vec(n, Rat(0)));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      rhs[p][q] =
          A.integrate(A.mul(a, A.mul(A.basis_vec(p), A.basis_vec(q))));
  // D = eta^{-1} rhs (eta^{-1})^T; eta^{-1} is symmetric up to sign for
  // graded pairings, use the explicit transpose
  Mat eiT(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eiT[i][j] = ei[j][i];
  return mat_mul(mat_mul(ei, rhs), eiT);
}

Vec euler_element(const GradedAlgebra& A) {
  Mat D = coproduct(A, A.unit_vec());
  Vec e(A.dim(), Rat(0));
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      if (D[i][j].is_zero()) continue;
      Vec m = A.mul(A.basis_vec(i), A.basis_vec(j));
      for (int k = 0; k < A.dim(); ++k) e[k] += D[i][j] * m[k];
    }
  return e;
}

HomologySection homology(const GradedAlgebra& A) {
  if (!A.diff) {
    HomologySection H;
    int n = A.dim();
    for (int i = 0; i < n; ++i) {
      H.h_basis.push_back(A.basis_vec(i));
      H.h_degrees.push_back(A.degrees[i]);
      H.z_basis.push_back(A.basis_vec(i));
    }
    H.h_eta.assign(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        H.h_eta[i][j] = A.pair(A.basis_vec(i), A.basis_vec(j));
    auto inv = mat_inverse(H.h_eta);
    if (!inv) throw std::domain_error("pairing on H is degenerate");
    H.h_eta_inv = *inv;
    return H;
  }
  const Mat& D = *A.diff;
  int n = A.dim();
  HomologySection H;
  H.z_basis = kernel_basis(D);
  // image basis: columns of D, reduced
  std::vector<Vec> img;
  {
    Mat cols;
    for (int j = 0; j < n; ++j) {
      Vec c(n);
      for (int i = 0; i < n; ++i) c[i] = D[i][j];
      bool zero = true;
      for (const Rat& x : c) zero &= x.is_zero();
      if (!zero) cols.push_back(c);
    }
    // reduce to a basis
    Mat m = cols;
    rref(m);
    for (const auto& row : m) {
      bool zero = true;
      for (const Rat& x : row) zero &= x.is_zero();
      if (!zero) img.push_back(row);
    }
  }
  // representatives: cycles extending the span of the boundaries (echelon)
  {
    Mat span = img;
    for (const auto& z : H.z_basis) {
      Mat test = span;
      test.push_back(z);
      if (mat_rank(test) > mat_rank(span)) {
        span.push_back(z);
        H.h_basis.push_back(z);
        int deg = 0;
        for (int i = 0; i < n; ++i)
          if (!z[i].is_zero()) deg = A.degrees[i];
        H.h_degrees.push_back(deg);
      }
    }
  }
  int h = (int)H.h_basis.size();
  H.h_eta.assign(h, Vec(h, Rat(0)));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      H.h_eta[i][j] = A.pair(H.h_basis[i], H.h_basis[j]);
  auto inv = mat_inverse(H.h_eta);
  if (!inv)
    throw std::domain_error("induced pairing on homology is degenerate");
  H.h_eta_inv = *inv;
  return H;
}

Vec project_cycle(const GradedAlgebra& A, const HomologySection& H,
                  const Vec& z) {
  // z = sum c_i h_i + boundary: solve in the quotient via the pairing on H:
  // pair(z, h_j) = sum_i c_i h_eta[i][j] (the pairing kills boundaries)
  if (A.diff) {
    Vec dz = A.d(z);
    for (const Rat& x : dz)
      if (!x.is_zero()) throw std::domain_error("not a cocycle");
  }
  int h = (int)H.h_basis.size();
  Vec rhs(h);
  for (int j = 0; j < h; ++j) rhs[j] = A.pair(z, H.h_basis[j]);
  // c = rhs * (h_eta)^{-1}, mind the side
  Vec c(h, Rat(0));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) c[i] += rhs[j] * H.h_eta_inv[j][i];
  return c;
}

// ---- serialization ----------------------------------------------------------

using nlohmann::json;

std::string algebra_to_json(const GradedAlgebra& A) {
  json j;
  j["basis"] = json::array();
  for (int i = 0; i < A.dim(); ++i)
    j["basis"].push_back({{"name", A.names[i]}, {"degree", A.degrees[i]}});
  j["unit"] = A.unit;
  j["mul"] = json::array();
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < A.dim(); ++k)
      for (int l = 0; l < A.dim(); ++l)
        if (!A.mul_table[i][k][l].is_zero())
          j["mul"].push_back(
              json::array({i, k, l, A.mul_table[i][k][l].str()}));
  j["integral"] = json::array();
  for (const Rat& r : A.integral) j["integral"].push_back(r.str());
  if (A.diff) {
    j["d"] = json::array();
    for (int i = 0; i < A.dim(); ++i)
      for (int k = 0; k < A.dim(); ++k)
        if (!(*A.diff)[i][k].is_zero())
          j["d"].push_back(json::array({i, k, (*A.diff)[i][k].str()}));
  }
  return j.dump(2) + "\n";
}

GradedAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  GradedAlgebra A;
  for (const auto& b : j.at("basis")) {
    A.names.push_back(b.at("name").get<std::string>());
    A.degrees.push_back(b.at("degree").get<int>());
  }
  int n = A.dim();
  A.unit = j.at("unit").get<int>();
  A.mul_table.assign(n, Mat(n, Vec(n, Rat(0))));
  for (const auto& m : j.at("mul"))
    A.mul_table[m.at(0).get<int>()][m.at(1).get<int>()][m.at(2).get<int>()] =
        Rat::parse(m.at(3).get<std::string>());
  for (const auto& r : j.at("integral"))
    A.integral.push_back(Rat::parse(r.get<std::string>()));
  if (j.contains("d")) {
    Mat D(n, Vec(n, Rat(0)));
    for (const auto& m : j["d"])
      D[m.at(0).get<int>()][m.at(1).get<int>()] =
          Rat::parse(m.at(2).get<std::string>());
    A.diff = D;
  }
  return A;
}

// ---- stock algebras ---------------------------------------------------------

static GradedAlgebra make_algebra(std::vector<std::string> names,
                                  std::vector<int> degrees, int unit,
                                  Vec integral) {
  GradedAlgebra A;
  A.names = std::move(names);
  A.degrees = std::move(degrees);
  A.unit = unit;
  A.integral = std::move(integral);
  int n = A.dim();
  A.mul_table.assign(n, Mat(n, Vec(n, Rat(0))));
  return A;
}

GradedAlgebra alg_dual_numbers() {
  GradedAlgebra A = make_algebra({"1", "x"}, {0, 2}, 0, {Rat(0), Rat(1)});
  A.mul_table[0][0][0] = Rat(1);
  A.mul_table[0][1][1] = Rat(1);
  A.mul_table[1][0][1] = Rat(1);
  return A;
}

GradedAlgebra alg_group_z2() {
  GradedAlgebra A = make_algebra({"1", "s"}, {0, 0}, 0, {Rat(1), Rat(0)});
  A.mul_table[0][0][0] = Rat(1);
  A.mul_table[0][1][1] = Rat(1);
  A.mul_table[1][0][1] = Rat(1);
  A.mul_table[1][1][0] = Rat(1);
  return A;
}

GradedAlgebra alg_trivial(Rat unit_integral) {
  GradedAlgebra A = make_algebra({"1"}, {0}, 0, {unit_integral});
  A.mul_table[0][0][0] = Rat(1);
  return A;
}

GradedAlgebra alg_quasi_frobenius() {
  // basis 1, u, y, uy with |u| = 1, |y| = 2, u^2 = y^2 = 0, du = y
  GradedAlgebra A = make_algebra({"1", "u", "y", "uy"}, {0, 1, 2, 3}, 0,
                                 {Rat(0), Rat(0), Rat(0), Rat(1)});
  auto set = [&](int i, int j, int k, int v) {
    A.mul_table[i][j][k] = Rat(v);
  };
  for (int i = 0; i < 4; ++i) {
    set(0, i, i, 1);
    if (i) set(i, 0, i, 1);
  }
  set(1, 2, 3, 1);  // u y = uy
  set(2, 1, 3, 1);  // y u = uy
  Mat D(4, Vec(4, Rat(0)));
  D[2][1] = Rat(1); // du = y
  A.diff = D;
  return A;
}

} // namespace arcops
