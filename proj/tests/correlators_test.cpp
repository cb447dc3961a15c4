#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcops/build.hpp"
#include "arcops/correlators.hpp"
#include "arcops/enumerate.hpp"
#include "arcops/hochschild.hpp"
#include "arcops/partition.hpp"
#include "arcops/poly.hpp"

using namespace arcops;

static ArcGraph annulus1() { return quasi_filling_graph({{0}, {1}}, {1, 0}); }

static Vec el(const GradedAlgebra& A, int i) { return A.basis_vec(i); }

TEST_CASE("polygon correlator on the dual numbers") {
  GradedAlgebra A = alg_dual_numbers();
  Vec one = el(A, 0), x = el(A, 1);
  CHECK(y_polygon(A, {x, one, x, one}) == Rat(0));
  CHECK(y_polygon(A, {x, one, one, one}) == Rat(1));
  CHECK(y_polygon(A, {one}) == Rat(0));
}

TEST_CASE("surface correlator: disk, annulus, genus one") {
  GradedAlgebra A = alg_dual_numbers();
  Vec one = el(A, 0), x = el(A, 1);
  CHECK(y_surface(A, 0, 1, {x, one}) == y_polygon(A, {x, one}));
  // annulus region: factor e = 2x
  CHECK(y_surface(A, 0, 2, {one}) == Rat(2));
  // genus-one region: factor e^2 = 0
  CHECK(y_surface(A, 1, 1, {one, one}) == Rat(0));
}

TEST_CASE("partitioned correlator of the doubled annulus") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph m2 = standard_marking(expand_edges(annulus1(), {2}));
  // angle flags: two marked angles per boundary
  Multilinear form = y_angle_form(A, m2);
  CHECK(form.slots == std::vector<int>{2, 2});
  // the two regions pair the decorations; check against a direct sum over
  // the basis with pairing weights
  auto direct = [&](int a0, int a1, int b0, int b1) {
    // region sides: outer square pairs (flag3, flag1); inner square pairs
    // (flag2, flag0); axes per boundary are [outside, inner]
    std::map<Flag, Vec> in;
    auto axes0 = marked_angle_axes(m2, 0), axes1 = marked_angle_axes(m2, 1);
    in[axes0[0]] = el(A, a0);
    in[axes0[1]] = el(A, a1);
    in[axes1[0]] = el(A, b0);
    in[axes1[1]] = el(A, b1);
    return y_partitioned(A, m2, in);
  };
  IndexIter it(2, 4);
  do {
    Rat v = form.at(it.idx);
    CHECK(v == direct(it.idx[0], it.idx[1], it.idx[2], it.idx[3]));
  } while (it.next());
  // nonzero somewhere
  CHECK(!form.is_zero());
}

TEST_CASE("single-region all-ones graph gives the polygon correlator") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph t2 = standard_marking(quasi_filling_graph({{0, 1, 2, 3}}, {2, 3, 0, 1}));
  REQUIRE(t2.regions.size() == 1);
  Multilinear form = y_angle_form(A, t2);
  // every entry is the cyclic integral of the region sides
  std::map<Flag, int> axis_of;
  {
    int t = 0;
    for (int b = 0; b < t2.n_boundaries(); ++b)
      for (Flag f : marked_angle_axes(t2, b)) axis_of[f] = t++;
  }
  IndexIter it(2, 4);
  do {
    std::vector<Vec> sides;
    for (const auto& c : t2.regions[0].cycles)
      for (Flag f : c) sides.push_back(el(A, it.idx[axis_of[t2.inv[f]]]));
    CHECK(form.at(it.idx) == y_polygon(A, sides));
  } while (it.next());
}

TEST_CASE("ribbon correlator agrees with the arc correlator through duality") {
  GradedAlgebra A = alg_group_z2();
  for (auto [gg, nn] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}) {
    auto corpus = enumerate_graphs(gg, nn, 3, Family::quasi_filling);
    int tested = 0;
    for (const auto& g0 : corpus) {
      if (tested >= 4) break;
      ArcGraph g = standard_marking(g0);
      auto s = expand_sum(g, g.n_arcs() + 1);
      for (const auto& [k, t] : s.terms) {
        ArcGraph part = t.value;
        part.angle_marks = std::vector<int>(part.n_flags(), 1);
        MarkedRibbonGraph dual = dual_ribbon(part);
        // same flags: ribbon angle f corresponds to arc angle inv(f)
        std::map<Flag, Vec> arc_in, rib_in;
        int seed = 1;
        for (Flag f = 0; f < part.n_flags(); ++f) {
          Vec v(A.dim());
          for (int i = 0; i < A.dim(); ++i)
            v[i] = Rat((seed = (seed * 37 + 11) % 97) % 5 - 2);
          arc_in[f] = v;
        }
        for (Flag f = 0; f < part.n_flags(); ++f)
          rib_in[f] = arc_in[part.inv[f]];
        CHECK(y_partitioned(A, part, arc_in) == y_ribbon(A, dual, rib_in));
      }
      ++tested;
    }
  }
}

TEST_CASE("tensor correlator of the one-arc annulus is the pairing") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph g = annulus1();
  Vec v = {Rat(2), Rat(3)}, w = {Rat(1), Rat(-1)};
  Rat expect = A.pair(v, w);
  CHECK(y_tensor(A, g, {{v}, {w}}) == expect);
  CHECK(y_tensor(A, g, {{v, v}, {w}}) == Rat(0));
}

TEST_CASE("act_vector on the straight multi-arc annulus is the identity") {
  GradedAlgebra A = alg_dual_numbers();
  // two arcs 0 -> 1 with aligned orders (the untwisted straight cylinder)
  ArcGraph g = with_io(quasi_filling_graph({{0, 1}, {2, 3}}, {2, 3, 0, 1}),
                       {IOMark::in, IOMark::out});
  // boundary 1 linear order (2,3): out word reads inv: (0,1) -> identity
  Vec v = {Rat(5), Rat(7)}, w = {Rat(1), Rat(2)};
  auto out = act_vector(A, g, {{v, w}});
  REQUIRE(out.has_value());
  REQUIRE(out->size() == 1);
  REQUIRE((*out)[0].size() == 2);
  CHECK((*out)[0][0] == v);
  CHECK((*out)[0][1] == w);
  CHECK(!act_vector(A, g, {{v}}).has_value());
}

TEST_CASE("compose_correlators: snake identity") {
  GradedAlgebra A = alg_dual_numbers();
  FrobeniusData fd = frobenius_data(A);
  Multilinear eta = Multilinear::zeros(A.dim(), {1, 1});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) eta.at({i, j}) = fd.eta[i][j];
  Multilinear snake = compose_correlators(eta, 1, eta, fd.eta_inv, A.degrees);
  CHECK(snake == eta);
}

TEST_CASE("feynman rules on the theta graph") {
  // two trivalent vertices joined by three edges
  MarkedRibbonGraph theta;
  theta.vertices = {{0, 1, 2}, {3, 4, 5}};
  theta.inv = {3, 5, 4, 0, 2, 1}; // cycles: orbit check below
  theta.cycle_marks.clear();
  for (const auto& c : ribbon_cycles(theta)) theta.cycle_marks.push_back(c[0]);
  theta.partitioned_role = true;
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    Multilinear tr = Multilinear::zeros(A.dim(), {3});
    IndexIter it(A.dim(), 3);
    do {
      Vec p = A.mul(A.mul(el(A, it.idx[0]), el(A, it.idx[1])), el(A, it.idx[2]));
      tr.at(it.idx) = A.integrate(p);
    } while (it.next());
    Rat direct = feynman(A, theta, {tr, tr});
    // independent route: sum over two Casimir legs, pair the third by the
    // cyclic-correlator composition
    FrobeniusData fd = frobenius_data(A);
    Rat indirect(0);
    for (int u1 = 0; u1 < A.dim(); ++u1)
      for (int v1 = 0; v1 < A.dim(); ++v1)
        for (int u2 = 0; u2 < A.dim(); ++u2)
          for (int v2 = 0; v2 < A.dim(); ++v2)
            for (int u3 = 0; u3 < A.dim(); ++u3)
              for (int v3 = 0; v3 < A.dim(); ++v3) {
                Rat w = fd.eta_inv[u1][v1] * fd.eta_inv[u2][v2] *
                        fd.eta_inv[u3][v3];
                if (w.is_zero()) continue;
                // vertex orders (0,1,2) and (3,4,5); inv pairs 0-3, 1-5, 2-4
                Rat f1 = tr.at({u1, u2, u3});
                Rat f2 = tr.at({v1, v3, v2});
                indirect += w * f1 * f2;
              }
    CHECK(direct == indirect);
    if (A.names[1] == "s") CHECK(direct == Rat(4)); // group algebra value
    if (A.names[1] == "x") CHECK(direct == Rat(0));
  }
}

TEST_CASE("feynman rejects non-cyclic vertex forms") {
  GradedAlgebra A = alg_group_z2();
  MarkedRibbonGraph loop;
  loop.vertices = {{0, 1}};
  loop.inv = {1, 0};
  for (const auto& c : ribbon_cycles(loop)) loop.cycle_marks.push_back(c[0]);
  Multilinear bad = Multilinear::zeros(A.dim(), {2});
  bad.at({0, 1}) = Rat(1); // not invariant under rotation
  CHECK_THROWS_AS(feynman(A, loop, {bad}), std::domain_error);
}

TEST_CASE("cylinder correlator: cut independence and the Euler factor") {
  GradedAlgebra A = alg_dual_numbers();
  std::vector<Vec> a = {el(A, 1), el(A, 0), el(A, 0)};
  std::vector<Vec> b = {el(A, 0), el(A, 0)};
  Rat expect = y_cylinder_closed(A, a, b);
  for (int i = 1; i <= (int)a.size(); ++i)
    for (int j = 1; j <= (int)b.size(); ++j)
      CHECK(y_cylinder(A, a, b, i, j) == expect);
  // int(a...b... e) with e = 2x: for all-ones words this is int(2x) = 2
  std::vector<Vec> ones1 = {el(A, 0)}, ones2 = {el(A, 0), el(A, 0)};
  CHECK(y_cylinder_closed(A, ones1, ones2) == Rat(2));
}

TEST_CASE("cyclic words compose through the Casimir") {
  GradedAlgebra A = alg_dual_numbers();
  FrobeniusData fd = frobenius_data(A);
  CycWord x = {0, 1}, y = {0, 1, 2};
  CHECK(word_substitute(x, 1, x) == CycWord{0, 1});
  for (int i = 1; i <= 2; ++i) {
    CycWord glued = word_substitute(y, i, x);
    Multilinear lhs = y_cyc_form(A, glued);
    Multilinear rhs = compose_correlators(y_cyc_form(A, y), i,
                                          y_cyc_form(A, x), fd.eta_inv,
                                          A.degrees);
    CHECK(lhs == rhs);
  }
  // a genuinely permuted sample
  CycWord sigma = {0, 2, 1};
  Multilinear lhs = y_cyc_form(A, word_substitute(sigma, 2, x));
  Multilinear rhs = compose_correlators(y_cyc_form(A, sigma), 2,
                                        y_cyc_form(A, x), fd.eta_inv,
                                        A.degrees);
  CHECK(lhs == rhs);
}

TEST_CASE("polygon correlators: triangle table and gluing") {
  GradedAlgebra A = alg_dual_numbers();
  Multilinear tri = y_poly_form(A, {0, 1, 2});
  // int(e_i e_j e_k) is 1 when exactly one factor is x
  IndexIter it(2, 3);
  do {
    int xs = it.idx[0] + it.idx[1] + it.idx[2];
    CHECK(tri.at(it.idx) == Rat(xs == 1 ? 1 : 0));
  } while (it.next());
  FrobeniusData fd = frobenius_data(A);
  // gluing two triangles = the square correlator
  Multilinear lhs = y_poly_form(A, glue_polygons({0, 1, 2}, 1, {0, 1, 2}));
  Multilinear rhs =
      compose_correlators(tri, 1, tri, fd.eta_inv, A.degrees);
  CHECK(lhs == rhs);
}

TEST_CASE("A-infinity polygons: triangulation collapse and d^2 = 0") {
  GradedAlgebra A = alg_dual_numbers();
  AInfinity ai = ainf_from_algebra(A);
  check_equivariant(ai);
  // any full triangulation of the square evaluates to the trace correlator
  PolyInf square{3, {}};
  PolyInf t1{3, {{1, 2}}}, t2{3, {{2, 3}}};
  Multilinear trace = y_cyc_form(A, {0, 1, 2, 3});
  CHECK(y_poly_infty(ai, t1) == trace);
  CHECK(y_poly_infty(ai, t2) == trace);
  // differential squares to zero on samples
  for (const PolyInf& p : {PolyInf{4, {}}, PolyInf{5, {{2, 3}}}}) {
    auto d1 = polyinf_differential(p);
    FormalSum<PolyInf> dd;
    for (const auto& [k, t] : d1.terms) {
      auto d2 = polyinf_differential(t.value);
      d2 *= t.coeff;
      dd += d2;
    }
    CHECK(dd.is_zero());
  }
}

TEST_CASE("hochschild: differentials and dualization") {
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    // d on a degree-0 cochain is the commutator: zero for commutative A
    Cochain a = cochain_of_element(A, el(A, 1));
    Cochain da = d_hoch(A, a);
    CHECK(da.is_zero());
    // d^2 = 0 on a spread of cochains
    for (int arity = 0; arity <= 2; ++arity) {
      Cochain f = cochain_zero(A, arity);
      int seed = 3;
      for (Rat& r : f.data) r = Rat((seed = (seed * 31 + 7) % 101) % 5 - 2);
      CHECK(d_hoch(A, d_hoch(A, f)).is_zero());
      // dualization intertwines the differentials
      Multilinear lhs = cochain_to_cyclic(A, d_hoch(A, f));
      Multilinear rhs = d_cyc(A, cochain_to_cyclic(A, f));
      CHECK(lhs == rhs);
      // round trip
      CHECK(cyclic_to_cochain(A, cochain_to_cyclic(A, f)) == f);
    }
  }
}

TEST_CASE("connes B: B^2 = 0 and Bd + dB = 0 on normalized cochains") {
  for (const GradedAlgebra& A : {alg_dual_numbers(), alg_group_z2()}) {
    for (int N = 2; N <= 4; ++N) {
      Multilinear phi = Multilinear::zeros(A.dim(), {N});
      int seed = 5;
      for (Rat& r : phi.data) r = Rat((seed = (seed * 29 + 13) % 103) % 7 - 3);
      phi = normalize_cyclic(A, phi);
      Multilinear b2 = connes_B(A, connes_B(A, phi));
      CHECK(b2.is_zero());
      Multilinear anti = d_cyc(A, connes_B(A, phi)) + connes_B(A, d_cyc(A, phi));
      CHECK(anti.is_zero());
    }
  }
}

TEST_CASE("cup and the new products") {
  GradedAlgebra A = alg_group_z2();
  Cochain ca = cochain_of_element(A, el(A, 1));
  Cochain cb = cochain_of_element(A, Vec{Rat(2), Rat(3)});
  // cup of elements is the product
  Cochain prod = cup(A, ca, cb);
  CHECK(apply_cochain(A, prod, {}) == A.mul(el(A, 1), Vec{Rat(2), Rat(3)}));
  // sqcup of two elements: b -> a b c
  Cochain sq = sqcup(A, ca, cb);
  for (int b = 0; b < A.dim(); ++b) {
    Vec expect = A.mul(el(A, 1), A.mul(el(A, b), Vec{Rat(2), Rat(3)}));
    CHECK(apply_cochain(A, sq, {b}) == expect);
  }
  // box_i with arity-0 g: f(..., a_i g a_{i+1}, ...)
  Cochain f = cochain_zero(A, 1);
  int seed = 9;
  for (Rat& r : f.data) r = Rat((seed = (seed * 17 + 5) % 97) % 5 - 2);
  Cochain boxed = box_i(A, f, 1, ca);
  for (int u = 0; u < A.dim(); ++u)
    for (int v = 0; v < A.dim(); ++v) {
      Vec sandwich = A.mul(el(A, u), A.mul(el(A, 1), el(A, v)));
      Vec expect(A.dim(), Rat(0));
      for (int k = 0; k < A.dim(); ++k) {
        if (sandwich[k].is_zero()) continue;
        Vec fe = apply_cochain(A, f, {k});
        for (int t = 0; t < A.dim(); ++t) expect[t] += sandwich[k] * fe[t];
      }
      CHECK(apply_cochain(A, boxed, {u, v}) == expect);
    }
  // cup is associative on the nose
  Cochain g = cochain_zero(A, 1), h = cochain_zero(A, 2);
  for (Rat& r : g.data) r = Rat((seed = (seed * 23 + 3) % 89) % 5 - 2);
  for (Rat& r : h.data) r = Rat((seed = (seed * 19 + 1) % 83) % 5 - 2);
  CHECK(cup(A, cup(A, f, g), h) == cup(A, f, cup(A, g, h)));
}

TEST_CASE("TV identity: the three-term coproduct decomposition") {
  // Delta mu(u,v) = (id x mu)(Delta x id) + id x id + (mu x id)(id x Delta)
  auto check_words = [&](const Word& u, const Word& v) {
    WordPairSum lhs = delta_word(mu_word(u, v));
    WordPairSum rhs;
    for (const auto& [k, t] : delta_word(u).terms)
      rhs.add(word_pair_key(t.value.first, mu_word(t.value.second, v)),
              {t.value.first, mu_word(t.value.second, v)}, t.coeff);
    rhs.add(word_pair_key(u, v), {u, v}, Rat(1));
    for (const auto& [k, t] : delta_word(v).terms)
      rhs.add(word_pair_key(mu_word(u, t.value.first), t.value.second),
              {mu_word(u, t.value.first), t.value.second}, t.coeff);
    CHECK(lhs == rhs);
  };
  check_words({0}, {1});
  check_words({0, 1}, {1, 0});
  check_words({1, 0, 1}, {0});
  check_words({0, 1, 1, 0}, {1, 1});
}

TEST_CASE("hochschild correlator: arity mismatch gives zero") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph g = with_io(annulus1(), {IOMark::in, IOMark::out});
  // demand 5 sides at a boundary that can host at most a few at weight cap
  Multilinear f0 = Multilinear::zeros(A.dim(), {1});
  f0.at({1}) = Rat(1);
  Multilinear f1 = Multilinear::zeros(A.dim(), {4});
  // boundary 0 (in) needs 1 marked side: only multiplicity 1 contributes;
  // then boundary 1 (out) has 1 marked side, never 4
  CHECK(y_hochschild(A, g, {f0, f1}) == Rat(0));
}

TEST_CASE("op_degree and normal forms reproduce the operation tensors") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph t2 = quasi_filling_graph({{0, 1, 2, 3}}, {2, 3, 0, 1});
  for (const ArcGraph& base : {annulus1(), t2}) {
    auto s = expand_sum(base, base.n_arcs() + 2);
    for (const auto& [k, t] : s.terms) {
      auto p = make_partitioned(t.value);
      CHECK(op_degree(p) == p.degree());
      NormalForm nf = normal_form_tensor(A, p);
      CHECK(nf.reconstructed == y_tensor_form(A, p.g));
      CHECK(nf.eta_powers == p.mult);
      ArcGraph marked = p.g;
      marked.angle_marks = std::vector<int>(p.g.n_flags(), 1);
      auto pm = make_partitioned(marked);
      NormalForm na = normal_form_angle(A, pm);
      CHECK(na.reconstructed == y_angle_form(A, marked));
    }
  }
}

static Cochain random_cocycle(const GradedAlgebra& A, int arity, int& seed) {
  // kernel basis of the Hochschild differential at this arity
  Mat m;
  Cochain probe = cochain_zero(A, arity);
  for (size_t t = 0; t < probe.data.size(); ++t) {
    Cochain delta = probe;
    delta.data[t] = Rat(1);
    Cochain img = d_hoch(A, delta);
    Vec col(img.data.size());
    for (size_t s = 0; s < img.data.size(); ++s) col[s] = img.data[s];
    m.push_back(col);
  }
  // rows = image coordinates: transpose for kernel_basis (map on columns)
  Mat mt(m[0].size(), Vec(m.size(), Rat(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) mt[j][i] = m[i][j];
  Cochain out = cochain_zero(A, arity);
  for (const Vec& z : kernel_basis(mt)) {
    Rat c((seed = (seed * 37 + 11) % 97) % 5 - 2);
    for (size_t t = 0; t < out.data.size(); ++t) out.data[t] += c * z[t];
  }
  return out;
}

static bool is_d_exact(const GradedAlgebra& A, const Cochain& f) {
  int arity = (int)f.slots.size() - 1;
  if (arity == 0) return f.is_zero();
  // image of d from arity-1 cochains, coordinate membership by rank
  Mat m;
  Cochain probe = cochain_zero(A, arity - 1);
  for (size_t t = 0; t < probe.data.size(); ++t) {
    Cochain delta = probe;
    delta.data[t] = Rat(1);
    Cochain img = d_hoch(A, delta);
    Vec row(img.data.size());
    for (size_t s = 0; s < img.data.size(); ++s) row[s] = img.data[s];
    m.push_back(row);
  }
  int base_rank = mat_rank(m);
  Vec row(f.data.size());
  for (size_t s = 0; s < f.data.size(); ++s) row[s] = f.data[s];
  m.push_back(row);
  return mat_rank(m) == base_rank;
}

TEST_CASE("brace composition distributes over the cup product") {
  for (const GradedAlgebra& A : {alg_group_z2(), alg_dual_numbers()}) {
    int seed = 11;
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int p = 1; p <= 2; ++p) {
          Cochain f = cochain_zero(A, n), g = cochain_zero(A, m),
                  h = cochain_zero(A, p);
          for (Rat& r : f.data) r = Rat((seed = (seed * 37 + 11) % 97) % 5 - 2);
          for (Rat& r : g.data) r = Rat((seed = (seed * 31 + 7) % 89) % 5 - 2);
          for (Rat& r : h.data) r = Rat((seed = (seed * 29 + 3) % 83) % 5 - 2);
          Cochain lhs = brace(A, cup(A, g, h), f);
          Cochain t1 = cup(A, brace(A, g, f), h);
          Cochain t2 = cup(A, g, brace(A, h, f));
          t2 *= Rat(m * (n - 1) % 2 ? -1 : 1);
          CHECK(lhs == t1 + t2);
        }
  }
}

TEST_CASE("bracket is a derivation of cup up to exact terms") {
  GradedAlgebra A = alg_dual_numbers();
  int seed = 13;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      int p = 1;
      Cochain f = random_cocycle(A, n, seed), g = random_cocycle(A, m, seed),
              h = random_cocycle(A, p, seed);
      Cochain lhs = bracket(A, f, cup(A, g, h));
      Cochain t1 = cup(A, bracket(A, f, g), h);
      Cochain t2 = cup(A, g, bracket(A, f, h));
      t2 *= Rat((n - 1) * m % 2 ? -1 : 1);
      Cochain diff = lhs - (t1 + t2);
      CHECK(is_d_exact(A, diff));
    }
}

TEST_CASE("cup is graded commutative up to exact terms") {
  GradedAlgebra A = alg_dual_numbers();
  int seed = 17;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      Cochain f = random_cocycle(A, n, seed), g = random_cocycle(A, m, seed);
      Cochain comm = cup(A, f, g);
      Cochain gf = cup(A, g, f);
      gf *= Rat(n * m % 2 ? -1 : 1);
      CHECK(is_d_exact(A, comm - gf));
    }
}

TEST_CASE("pre-Lie Jacobi shape: bracket satisfies graded antisymmetry") {
  GradedAlgebra A = alg_dual_numbers();
  int seed = 19;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      Cochain f = cochain_zero(A, n), g = cochain_zero(A, m);
      for (Rat& r : f.data) r = Rat((seed = (seed * 37 + 11) % 97) % 5 - 2);
      for (Rat& r : g.data) r = Rat((seed = (seed * 31 + 7) % 89) % 5 - 2);
      Cochain lhs = bracket(A, f, g);
      Cochain rhs = bracket(A, g, f);
      rhs *= Rat((n - 1) * (m - 1) % 2 ? 1 : -1);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hochschild correlator of element inputs on the annulus") {
  GradedAlgebra A = alg_dual_numbers();
  ArcGraph ann = with_io(quasi_filling_graph({{0}, {1}}, {1, 0}),
                         {IOMark::in, IOMark::out});
  // arity-0 cochains: only the minimal multiplicity contributes and the
  // correlator is the pairing of the two decorations
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Multilinear f0 = Multilinear::zeros(A.dim(), {1});
      f0.at({a}) = Rat(1);
      Multilinear f1 = Multilinear::zeros(A.dim(), {1});
      f1.at({b}) = Rat(1);
      CHECK(y_hochschild(A, ann, {f0, f1}) ==
            A.pair(A.basis_vec(a), A.basis_vec(b)));
    }
}

TEST_CASE("word coproducts and widened products") {
  Word w = {0, 1, 1, 0};
  // delta_l: proper iterated splits, C(n-1, l) terms
  auto d2 = delta_l_word(w, 2);
  CHECK((int)d2.size() == 3); // C(3,2)
  for (const auto& [k, t] : d2.terms) {
    size_t total = 0;
    for (const Word& part : t.value) {
      CHECK(!part.empty());
      total += part.size();
    }
    CHECK(total == w.size());
  }
  // lozenge_l: l extracted letters; boxtimes re-assembles each term
  auto l2 = lozenge_l_word(w, 2);
  for (const auto& [k, t] : l2.terms) {
    Word rebuilt = t.value.words[0];
    for (size_t i = 0; i < t.value.mids.size(); ++i)
      rebuilt = boxtimes_word(rebuilt, t.value.mids[i], t.value.words[i + 1]);
    CHECK(rebuilt == w);
  }
  // the lozenge raises the widened degree by one: term count is the length
  CHECK(lozenge_word(w).size() <= w.size());
  int total_terms = 0;
  for (const auto& [k, t] : lozenge_word(w).terms)
    total_terms += 1;
  CHECK(total_terms >= 1);
}

TEST_CASE("BV relation on cohomology representatives") {
  GradedAlgebra A = alg_dual_numbers();
  auto bv = [&](const Cochain& x) {
    Multilinear phi = normalize_cyclic(A, cochain_to_cyclic(A, x));
    return cyclic_to_cochain(A, connes_B(A, phi));
  };
  int seed = 5;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      Cochain f = random_cocycle(A, n, seed), g = random_cocycle(A, m, seed);
      Cochain br = bracket(A, f, g);
      Cochain t0 = bv(cup(A, f, g));
      Cochain t1 = cup(A, bv(f), g);
      t1 *= Rat(-1);
      Cochain t2 = cup(A, f, bv(g));
      t2 *= Rat(n % 2 ? 1 : -1); // -(-1)^n
      Cochain rhs = t0 + t1 + t2;
      rhs *= Rat(n % 2 ? -1 : 1); // (-1)^n
      CHECK(is_d_exact(A, br - rhs));
    }
}
