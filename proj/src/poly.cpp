#include "arcops/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "arcops/sign.hpp"

namespace arcops {

CycWord word_substitute(const CycWord& x, int i, const CycWord& y) {
  int n = (int)x.size() - 1; // letters 0..n
  int m = (int)y.size() - 1;
  if (i < 1 || i > n) throw std::invalid_argument("word_substitute: bad slot");
  // rotate y to start at 0
  CycWord yr = y;
  auto it = std::find(yr.begin(), yr.end(), 0);
  if (it == yr.end()) throw std::invalid_argument("word lacks letter 0");
  std::rotate(yr.begin(), it, yr.end());
  CycWord out;
  auto relx = [&](int l) { return l < i ? l : (l == i ? -1 : l + m - 1); };
  auto rely = [&](int l) { return i + l - 1; };
  for (int l : x) {
    if (l != i) {
      out.push_back(relx(l));
    } else {
      for (int t = 1; t <= m; ++t) out.push_back(rely(yr[t]));
    }
  }
  return out;
}

Multilinear y_cyc_form(const GradedAlgebra& A, const CycWord& word) {
  int k = (int)word.size();
  Multilinear out = Multilinear::zeros(A.dim(), std::vector<int>(k, 1));
  IndexIter it(A.dim(), k);
  do {
    // product a_{word[0]} ... a_{word[k-1]}
    Vec p = A.unit_vec();
    for (int t = 0; t < k; ++t) p = A.mul(p, A.basis_vec(it.idx[word[t]]));
    Rat v = A.integrate(p);
    if (!v.is_zero()) {
      std::vector<int> degs(k);
      for (int t = 0; t < k; ++t) degs[t] = A.degrees[it.idx[t]];
      v *= Rat(koszul_sign(degs, word));
      out.at(it.idx) = v;
    }
  } while (it.next());
  return out;
}

CycWord polygon_canonical(const CycWord& w) {
  CycWord out = w;
  auto it = std::find(out.begin(), out.end(), 0);
  if (it == out.end()) throw std::invalid_argument("polygon lacks side 0");
  std::rotate(out.begin(), it, out.end());
  return out;
}

CycWord glue_polygons(const CycWord& p, int i, const CycWord& q) {
  return polygon_canonical(word_substitute(polygon_canonical(p), i,
                                           polygon_canonical(q)));
}

Multilinear y_poly_form(const GradedAlgebra& A, const CycWord& p) {
  return y_cyc_form(A, polygon_canonical(p));
}

std::string polyinf_key(const PolyInf& p) {
  std::ostringstream os;
  os << p.n << ":";
  auto chords = p.chords;
  std::sort(chords.begin(), chords.end());
  for (auto& [a, b] : chords) os << a << "-" << b << ",";
  return os.str();
}

bool polyinf_valid(const PolyInf& p) {
  for (auto& [a, b] : p.chords) {
    if (a < 1 || b > p.n || a > b) return false;
    if (b - a + 1 < 2 || b - a + 1 > p.n - 1) return false;
  }
  auto chords = p.chords;
  std::sort(chords.begin(), chords.end());
  for (size_t s = 0; s < chords.size(); ++s)
    for (size_t t = s + 1; t < chords.size(); ++t) {
      auto [a, b] = chords[s];
      auto [c, d] = chords[t];
      if (a == c && b == d) return false; // duplicate
      bool nested = (c >= a && d <= b) || (a >= c && b <= d);
      bool disjoint = d < a || b < c;
      if (!nested && !disjoint) return false; // crossing
    }
  return true;
}

AInfinity ainf_from_algebra(const GradedAlgebra& A) {
  AInfinity ai;
  ai.dim = A.dim();
  ai.degrees = A.degrees;
  FrobeniusData fd = frobenius_data(A);
  ai.casimir = fd.eta_inv;
  ai.seed.resize(3);
  // mu_2 seed: <a_0, a_1 a_2>
  Multilinear m2 = Multilinear::zeros(A.dim(), {1, 1, 1});
  IndexIter it(A.dim(), 3);
  do {
    Rat v = A.integrate(A.mul(
        A.basis_vec(it.idx[0]),
        A.mul(A.basis_vec(it.idx[1]), A.basis_vec(it.idx[2]))));
    if (!v.is_zero()) m2.at(it.idx) = v;
  } while (it.next());
  ai.seed[2] = m2;
  return ai;
}

void check_equivariant(const AInfinity& ai) {
  for (size_t k = 2; k < ai.seed.size(); ++k) {
    const Multilinear& f = ai.seed[k];
    if (f.dim == 0) continue;
    int axes = f.total_axes();
    // cyclic rotation invariance with the Koszul sign
    std::vector<int> perm(axes);
    for (int t = 0; t < axes; ++t) perm[t] = (t + 1) % axes;
    Multilinear rot = permute_slots(f, perm, ai.degrees);
    if (!(rot == f))
      throw std::domain_error("A-infinity seed correlator is not cyclic");
  }
}

// region structure of a decomposition as a planted tree: each chord [a..b]
// is a node; the root is the full polygon
namespace {
struct Node {
  int a, b; // side range (root: 1..n plus side 0 implicitly)
  std::vector<int> children;
};

struct Tree {
  std::vector<Node> nodes; // node 0 = root
  std::vector<int> dfs;    // region visit order
};

Tree build_tree(const PolyInf& p) {
  Tree t;
  t.nodes.push_back({1, p.n, {}});
  // sort chords by width descending so parents precede children
  auto chords = p.chords;
  std::sort(chords.begin(), chords.end(), [](auto& x, auto& y) {
    return (x.second - x.first) > (y.second - y.first);
  });
  for (auto& [a, b] : chords) {
    // parent: the smallest node range containing [a, b]
    int parent = 0;
    for (int v = 1; v < (int)t.nodes.size(); ++v)
      if (t.nodes[v].a <= a && b <= t.nodes[v].b &&
          (t.nodes[v].b - t.nodes[v].a) <
              (t.nodes[parent].b - t.nodes[parent].a))
        parent = v;
    t.nodes.push_back({a, b, {}});
    t.nodes[parent].children.push_back((int)t.nodes.size() - 1);
  }
  for (auto& nd : t.nodes)
    std::sort(nd.children.begin(), nd.children.end(),
              [&](int x, int y) { return t.nodes[x].a < t.nodes[y].a; });
  // depth-first region order
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    t.dfs.push_back(v);
    for (auto it = t.nodes[v].children.rbegin();
         it != t.nodes[v].children.rend(); ++it)
      stack.push_back(*it);
  }
  return t;
}

// the slots of node v: the chord itself (slot 0, absent for the root where
// side 0 plays this role) followed by its sides and child chords in order
Multilinear eval_node(const AInfinity& ai, const Tree& t, int v) {
  const Node& nd = t.nodes[v];
  // count direct slots: positions a..b covered by child ranges or sides
  std::vector<std::pair<int, int>> items; // (start, child index or -1)
  int pos = nd.a;
  std::vector<int> kids = nd.children;
  size_t ki = 0;
  while (pos <= nd.b) {
    if (ki < kids.size() && t.nodes[kids[ki]].a == pos) {
      items.push_back({pos, kids[ki]});
      pos = t.nodes[kids[ki]].b + 1;
      ++ki;
    } else {
      items.push_back({pos, -1});
      ++pos;
    }
  }
  int arity = (int)items.size();
  if ((int)ai.seed.size() <= arity || ai.seed[arity].dim == 0)
    throw std::domain_error("A-infinity structure lacks mu_" +
                            std::to_string(arity));
  Multilinear form = ai.seed[arity]; // slots: 0 (output side), then items
  // splice children
  for (int s = (int)items.size() - 1; s >= 0; --s) {
    if (items[s].second < 0) continue;
    Multilinear child = eval_node(ai, t, items[s].second);
    form = compose_correlators(form, s + 1, child, ai.casimir, ai.degrees);
  }
  return form;
}

} // namespace

Multilinear y_poly_infty(const AInfinity& ai, const PolyInf& p) {
  if (!polyinf_valid(p)) throw std::invalid_argument("bad decomposition");
  Tree t = build_tree(p);
  return eval_node(ai, t, 0);
}

FormalSum<PolyInf> polyinf_differential(const PolyInf& p) {
  FormalSum<PolyInf> out;
  for (int a = 1; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b) {
      if (b - a + 1 > p.n - 1) continue;
      PolyInf q = p;
      q.chords.push_back({a, b});
      if (!polyinf_valid(q)) continue;
      // sign: position of the new region in the region order of q
      Tree t = build_tree(q);
      int node = -1;
      for (int v = 1; v < (int)t.nodes.size(); ++v)
        if (t.nodes[v].a == a && t.nodes[v].b == b) node = v;
      // disambiguate duplicates: the new chord is the unique node with the
      // exact range not already in p
      int posn = 0;
      for (int s = 0; s < (int)t.dfs.size(); ++s)
        if (t.dfs[s] == node) posn = s;
      int sign = posn % 2 ? -1 : 1;
      out.add(polyinf_key(q), q, Rat(sign));
    }
  return out;
}

} // namespace arcops
