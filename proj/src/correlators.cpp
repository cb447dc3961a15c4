#include "arcops/correlators.hpp"

#include <algorithm>
#include <functional>

#include "arcops/partition.hpp"
#include "arcops/sign.hpp"

namespace arcops {

Rat y_polygon(const GradedAlgebra& A, const std::vector<Vec>& sides) {
  if (sides.empty()) throw std::invalid_argument("y_polygon: no sides");
  Vec p = A.unit_vec();
  for (const Vec& s : sides) p = A.mul(p, s);
  return A.integrate(p);
}

Rat y_surface(const GradedAlgebra& A, int genus, int n_cycles,
              const std::vector<Vec>& sides) {
  int chi = 2 - 2 * genus - n_cycles;
  if (chi != 1 && !A.is_commutative())
    throw std::domain_error(
        "surface correlator needs a commutative algebra off the disk");
  Vec p = A.unit_vec();
  for (const Vec& s : sides) p = A.mul(p, s);
  Vec e = euler_element(A);
  for (int t = 0; t < 1 - chi; ++t) p = A.mul(p, e);
  return A.integrate(p);
}

// sides of a region in evaluation order: the marked angle flags of each
// cycle, cycles in stored order, then the phantom sides of the flagless
// boundaries sitting inside the region (their decorations join the region
// integral; the axis is named by the negative sentinel -(label+1))
static Flag phantom_flag(int boundary) { return -(boundary + 1); }

static std::vector<Flag> region_marked_sides(const ArcGraph& g,
                                             const Region& r) {
  std::vector<Flag> out;
  for (const auto& c : r.cycles)
    for (Flag f : c) {
      Flag h = g.inv[f]; // the angle side after ArcSide(f)
      if (!g.angle_marks || (*g.angle_marks)[h] == 1) out.push_back(h);
    }
  for (int b : r.isolated) out.push_back(phantom_flag(b));
  return out;
}

Rat y_partitioned(const GradedAlgebra& A, const ArcGraph& g,
                  const std::map<Flag, Vec>& inputs) {
  if (!g.angle_marks) throw std::invalid_argument("y_partitioned needs marks");
  Rat out(1);
  for (const auto& r : g.regions) {
    std::vector<Vec> sides;
    for (Flag h : region_marked_sides(g, r)) {
      auto it = inputs.find(h);
      if (it == inputs.end())
        throw std::invalid_argument("missing input for a marked angle");
      sides.push_back(it->second);
    }
    int cycles = (int)(r.cycles.size() + r.isolated.size());
    Rat f = y_surface(A, r.genus, cycles, sides.empty()
                                              ? std::vector<Vec>{A.unit_vec()}
                                              : sides);
    out *= f;
    if (out.is_zero()) return out;
  }
  return out;
}

std::vector<Flag> marked_angle_axes(const ArcGraph& g, int boundary) {
  std::vector<Flag> axes;
  const auto& b = g.bnd[boundary];
  if (b.empty()) {
    // a flagless boundary carries one phantom side: the dual of the
    // degree-zero part of the output, decorating its region's integral
    axes.push_back(phantom_flag(boundary));
    return axes;
  }
  auto marked = [&](Flag f) {
    return !g.angle_marks || (*g.angle_marks)[f] == 1;
  };
  if (marked(b.back())) axes.push_back(b.back()); // outside angle first
  for (int s = 0; s + 1 < (int)b.size(); ++s)
    if (marked(b[s])) axes.push_back(b[s]);
  return axes;
}

Multilinear y_angle_form(const GradedAlgebra& A, const ArcGraph& g) {
  std::vector<std::vector<Flag>> axes;
  std::vector<int> slots;
  for (int b = 0; b < g.n_boundaries(); ++b) {
    axes.push_back(marked_angle_axes(g, b));
    slots.push_back((int)axes.back().size());
  }
  Multilinear out = Multilinear::zeros(A.dim(), slots);
  // axis position per flag
  std::map<Flag, int> pos;
  {
    int t = 0;
    for (const auto& ax : axes)
      for (Flag f : ax) pos[f] = t++;
  }
  IndexIter it(A.dim(), out.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    Rat v(1);
    for (const auto& r : g.regions) {
      std::vector<Vec> sides;
      for (Flag h : region_marked_sides(g, r))
        sides.push_back(A.basis_vec(it.idx[pos[h]]));
      int cycles = (int)(r.cycles.size() + r.isolated.size());
      v *= y_surface(A, r.genus, cycles,
                     sides.empty() ? std::vector<Vec>{A.unit_vec()} : sides);
      if (v.is_zero()) break;
    }
    if (!v.is_zero()) out.at(it.idx) = v;
    if (out.total_axes() == 0) break;
    it.next();
  }
  return out;
}

Rat y_ribbon(const GradedAlgebra& A, const MarkedRibbonGraph& g,
             const std::map<Flag, Vec>& inputs) {
  if (!g.angle_marks) throw std::invalid_argument("y_ribbon needs marks");
  Rat out(1);
  for (const auto& v : g.vertices) {
    std::vector<Vec> sides;
    for (Flag f : v)
      if ((*g.angle_marks)[f] == 1) {
        auto it = inputs.find(f);
        if (it == inputs.end())
          throw std::invalid_argument("missing input for a marked angle");
        sides.push_back(it->second);
      }
    Vec p = A.unit_vec();
    for (const Vec& s : sides) p = A.mul(p, s);
    out *= A.integrate(p);
    if (out.is_zero()) return out;
  }
  return out;
}

Multilinear y_tensor_form(const GradedAlgebra& A, const ArcGraph& g) {
  FrobeniusData fd = frobenius_data(A);
  std::vector<int> slots;
  for (const auto& b : g.bnd) slots.push_back((int)b.size());
  Multilinear out = Multilinear::zeros(A.dim(), slots);
  std::map<Flag, int> pos;
  {
    int t = 0;
    for (const auto& b : g.bnd)
      for (Flag f : b) pos[f] = t++;
  }
  auto edges = edge_list(g);
  IndexIter it(A.dim(), out.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    Rat v(1);
    for (const auto& e : edges) {
      v *= fd.eta[it.idx[pos[e.a]]][it.idx[pos[e.b]]];
      if (v.is_zero()) break;
    }
    if (!v.is_zero()) out.at(it.idx) = v;
    if (out.total_axes() == 0) break;
    it.next();
  }
  return out;
}

Rat y_tensor(const GradedAlgebra& A, const ArcGraph& g,
             const std::vector<std::vector<Vec>>& words) {
  if ((int)words.size() != g.n_boundaries())
    throw std::invalid_argument("y_tensor: one word per boundary");
  for (int b = 0; b < g.n_boundaries(); ++b)
    if (words[b].size() != g.bnd[b].size()) return Rat(0);
  FrobeniusData fd = frobenius_data(A);
  std::map<Flag, const Vec*> of;
  for (int b = 0; b < g.n_boundaries(); ++b)
    for (int s = 0; s < (int)g.bnd[b].size(); ++s)
      of[g.bnd[b][s]] = &words[b][s];
  Rat out(1);
  for (const auto& e : edge_list(g)) {
    Rat p(0);
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j)
        p += (*of[e.a])[i] * (*of[e.b])[j] * fd.eta[i][j];
    out *= p;
    if (out.is_zero()) return out;
  }
  return out;
}

std::optional<std::vector<std::vector<Vec>>> act_vector(
    const GradedAlgebra& A, const ArcGraph& g,
    const std::vector<std::vector<Vec>>& in_words) {
  if (!g.io) throw std::invalid_argument("act_vector needs io marks");
  Classification c = classify(g);
  if (!c.in_out_only)
    throw std::domain_error("act_vector: arcs must run in<->out");
  FlagIndex ix = index_flags(g);
  std::map<Flag, const Vec*> decor;
  int in_seen = 0;
  for (int b = 0; b < g.n_boundaries(); ++b) {
    if ((*g.io)[b] != IOMark::in) continue;
    if (in_seen >= (int)in_words.size())
      throw std::invalid_argument("act_vector: missing in-words");
    const auto& w = in_words[in_seen++];
    if (w.size() != g.bnd[b].size()) return std::nullopt;
    for (int s = 0; s < (int)g.bnd[b].size(); ++s) decor[g.bnd[b][s]] = &w[s];
  }
  (void)A;
  std::vector<std::vector<Vec>> out;
  for (int b = 0; b < g.n_boundaries(); ++b) {
    if ((*g.io)[b] != IOMark::out) continue;
    std::vector<Vec> w;
    for (Flag f : g.bnd[b]) w.push_back(*decor[g.inv[f]]);
    out.push_back(w);
  }
  (void)ix;
  return out;
}

std::vector<std::vector<int>> hochschild_partitions(
    const ArcGraph& alpha, const std::vector<int>& targets) {
  ArcGraph a = alpha.angle_marks ? canonicalize(alpha) : standard_marking(alpha);
  FlagIndex ix = index_flags(a);
  auto edges = edge_list(a);
  auto eo = edge_of_flag(a, edges);
  int E = (int)edges.size(), B = a.n_boundaries();
  // base counts of 1-marked angles per boundary and incidence counts; a
  // flagless boundary always counts its single phantom side
  std::vector<int> base1(B, 0);
  std::vector<std::vector<int>> inc(E, std::vector<int>(B, 0));
  for (Flag f = 0; f < a.n_flags(); ++f) {
    if ((*a.angle_marks)[f] == 1) base1[ix.boundary[f]]++;
    inc[eo[f]][ix.boundary[f]]++;
  }
  for (int b = 0; b < B; ++b)
    if (a.bnd[b].empty()) base1[b] = 1;
  int cap = 1;
  for (int t : targets) cap = std::max(cap, t);
  std::vector<std::vector<int>> out;
  std::vector<int> m(E, 1);
  std::function<void(int)> rec = [&](int e) {
    if (e == E) {
      for (int b = 0; b < B; ++b) {
        int count = base1[b];
        for (int ee = 0; ee < E; ++ee) count += inc[ee][b] * (m[ee] - 1);
        if (count != targets[b]) return;
      }
      out.push_back(m);
      return;
    }
    for (int v = 1; v <= cap; ++v) {
      m[e] = v;
      rec(e + 1);
    }
  };
  rec(0);
  return out;
}

Rat contract_with(const Multilinear& form,
                  const std::vector<Multilinear>& factors) {
  if (factors.size() != form.slots.size())
    throw std::invalid_argument("contract_with: one factor per slot");
  for (size_t t = 0; t < factors.size(); ++t) {
    if (factors[t].slots.size() != 1 || factors[t].slots[0] != form.slots[t])
      return Rat(0);
  }
  Rat out(0);
  IndexIter it(form.dim, form.total_axes());
  bool first = form.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    Rat v = form.at(it.idx);
    if (!v.is_zero()) {
      int off = 0;
      for (size_t t = 0; t < factors.size() && !v.is_zero(); ++t) {
        std::vector<int> sub(it.idx.begin() + off,
                             it.idx.begin() + off + form.slots[t]);
        v *= factors[t].at(sub);
        off += form.slots[t];
      }
      out += v;
    }
    if (form.total_axes() == 0) break;
    it.next();
  }
  return out;
}

Rat y_hochschild(const GradedAlgebra& A, const ArcGraph& alpha,
                 const std::vector<Multilinear>& f_tilde) {
  ArcGraph a =
      alpha.angle_marks ? canonicalize(alpha) : standard_marking(alpha);
  if ((int)f_tilde.size() != a.n_boundaries())
    throw std::invalid_argument("y_hochschild: one cochain per boundary");
  std::vector<int> targets;
  for (const auto& f : f_tilde) targets.push_back(f.slots.at(0));
  Rat out(0);
  for (const auto& m : hochschild_partitions(a, targets)) {
    ArcGraph t = expand_edges(a, m, 1);
    Multilinear form = y_angle_form(A, t);
    int sign = a.io ? expansion_sign_io(a, m) : expansion_sign(m);
    out += Rat(sign) * contract_with(form, f_tilde);
  }
  return out;
}

Multilinear y_hochschild_partial(const GradedAlgebra& A, const ArcGraph& alpha,
                                 const std::vector<Multilinear>& f_tilde,
                                 int free_slot, int free_arity) {
  ArcGraph a =
      alpha.angle_marks ? canonicalize(alpha) : standard_marking(alpha);
  std::vector<int> targets;
  for (int b = 0; b < a.n_boundaries(); ++b)
    targets.push_back(b == free_slot ? free_arity : f_tilde[b].slots.at(0));
  Multilinear out = Multilinear::zeros(A.dim(), {free_arity});
  for (const auto& m : hochschild_partitions(a, targets)) {
    ArcGraph t = expand_edges(a, m, 1);
    Multilinear form = y_angle_form(A, t);
    Rat sgn(a.io ? expansion_sign_io(a, m) : expansion_sign(m));
    // contract every slot but free_slot
    std::vector<int> off(form.slots.size() + 1, 0);
    for (size_t s = 0; s < form.slots.size(); ++s)
      off[s + 1] = off[s] + form.slots[s];
    IndexIter it(A.dim(), form.total_axes());
    bool first = form.total_axes() == 0;
    while (first || !it.done) {
      first = false;
      Rat v = form.at(it.idx);
      if (!v.is_zero()) {
        for (size_t s = 0; s < form.slots.size() && !v.is_zero(); ++s) {
          if ((int)s == free_slot) continue;
          std::vector<int> sub(it.idx.begin() + off[s],
                               it.idx.begin() + off[s] + form.slots[s]);
          v *= f_tilde[s].at(sub);
        }
        if (!v.is_zero()) {
          std::vector<int> sub(it.idx.begin() + off[free_slot],
                               it.idx.begin() + off[free_slot] +
                                   form.slots[free_slot]);
          out.at(sub) += sgn * v;
        }
      }
      if (form.total_axes() == 0) break;
      it.next();
    }
  }
  return out;
}

Rat feynman(const GradedAlgebra& A, const MarkedRibbonGraph& g,
            const std::vector<Multilinear>& vertex_forms) {
  if ((int)vertex_forms.size() != g.n_vertices())
    throw std::invalid_argument("feynman: one form per vertex");
  FrobeniusData fd = frobenius_data(A);
  // cyclicity gate: each form invariant under rotating its slot axes
  for (int v = 0; v < g.n_vertices(); ++v) {
    const Multilinear& f = vertex_forms[v];
    int k = (int)g.vertices[v].size();
    if (f.total_axes() != k)
      throw std::invalid_argument("feynman: arity mismatch");
    if (k > 1) {
      IndexIter it(A.dim(), k);
      do {
        std::vector<int> rot(it.idx.begin() + 1, it.idx.end());
        rot.push_back(it.idx[0]);
        // Koszul sign of the rotation
        std::vector<int> degs(k), tgt(k);
        for (int t = 0; t < k; ++t) degs[t] = A.degrees[it.idx[t]];
        for (int t = 0; t < k; ++t) tgt[t] = (t + 1) % k;
        Rat lhs = f.at(it.idx);
        Rat rhs = f.at(rot) * Rat(koszul_sign(degs, tgt));
        if (lhs != rhs)
          throw std::domain_error("feynman: vertex form is not cyclic");
      } while (it.next());
    }
  }
  // contract one Casimir per edge
  Rat out(0);
  IndexIter it(A.dim(), g.n_flags());
  do {
    Rat v(1);
    for (int f = 0; f < g.n_flags() && !v.is_zero(); ++f)
      if (f < g.inv[f]) v *= fd.eta_inv[it.idx[f]][it.idx[g.inv[f]]];
    if (v.is_zero()) continue;
    for (int w = 0; w < g.n_vertices() && !v.is_zero(); ++w) {
      std::vector<int> sub;
      for (Flag f : g.vertices[w]) sub.push_back(it.idx[f]);
      v *= vertex_forms[w].at(sub);
    }
    out += v;
  } while (it.next());
  return out;
}

Rat y_cylinder(const GradedAlgebra& A, const std::vector<Vec>& a,
               const std::vector<Vec>& b, int i, int j) {
  if (!A.is_commutative())
    throw std::domain_error("cylinder correlator needs a commutative algebra");
  int n = (int)a.size(), m = (int)b.size();
  if (i < 1 || i > n || j < 1 || j > m)
    throw std::invalid_argument("y_cylinder: bad cut");
  Mat D = coproduct(A, a[i - 1]);
  Rat out(0);
  for (int p = 0; p < A.dim(); ++p)
    for (int q = 0; q < A.dim(); ++q) {
      if (D[p][q].is_zero()) continue;
      Vec prod = A.unit_vec();
      for (int t = 0; t < i - 1; ++t) prod = A.mul(prod, a[t]);
      prod = A.mul(prod, A.basis_vec(p));
      for (int t = j - 1; t < m; ++t) prod = A.mul(prod, b[t]);
      for (int t = 0; t < j - 1; ++t) prod = A.mul(prod, b[t]);
      prod = A.mul(prod, A.basis_vec(q));
      for (int t = i; t < n; ++t) prod = A.mul(prod, a[t]);
      out += D[p][q] * A.integrate(prod);
    }
  return out;
}

Rat y_cylinder_closed(const GradedAlgebra& A, const std::vector<Vec>& a,
                      const std::vector<Vec>& b) {
  Vec prod = A.unit_vec();
  for (const Vec& x : a) prod = A.mul(prod, x);
  for (const Vec& x : b) prod = A.mul(prod, x);
  prod = A.mul(prod, euler_element(A));
  return A.integrate(prod);
}

} // namespace arcops
