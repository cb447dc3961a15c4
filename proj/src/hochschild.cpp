#include "arcops/hochschild.hpp"

#include <algorithm>
#include <sstream>

#include "arcops/sign.hpp"

namespace arcops {

Cochain cochain_zero(const GradedAlgebra& A, int arity) {
  return Multilinear::zeros(A.dim(), std::vector<int>(arity + 1, 1));
}

Cochain cochain_of_element(const GradedAlgebra& A, const Vec& a) {
  Cochain f = cochain_zero(A, 0);
  for (int k = 0; k < A.dim(); ++k) f.at({k}) = a[k];
  return f;
}

Vec apply_cochain(const GradedAlgebra& A, const Cochain& f,
                  const std::vector<int>& args) {
  Vec out(A.dim(), Rat(0));
  std::vector<int> idx(args.size() + 1);
  for (size_t t = 0; t < args.size(); ++t) idx[t + 1] = args[t];
  for (int k = 0; k < A.dim(); ++k) {
    idx[0] = k;
    out[k] = f.at(idx);
  }
  return out;
}

Multilinear cochain_to_cyclic(const GradedAlgebra& A, const Cochain& f) {
  int n = (int)f.slots.size() - 1;
  FrobeniusData fd = frobenius_data(A);
  Multilinear out = Multilinear::zeros(A.dim(), {n + 1});
  IndexIter it(A.dim(), n + 1);
  do {
    Rat v(0);
    std::vector<int> fi = it.idx;
    for (int k = 0; k < A.dim(); ++k) {
      fi[0] = k;
      v += fd.eta[it.idx[0]][k] * f.at(fi);
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain cyclic_to_cochain(const GradedAlgebra& A, const Multilinear& phi) {
  int n = phi.slots.at(0) - 1;
  FrobeniusData fd = frobenius_data(A);
  Cochain out = cochain_zero(A, n);
  IndexIter it(A.dim(), n + 1);
  do {
    Rat v(0);
    std::vector<int> pi = it.idx;
    for (int k = 0; k < A.dim(); ++k) {
      pi[0] = k;
      v += fd.eta_inv[it.idx[0]][k] * phi.at(pi);
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Multilinear cochain_to_decoration(const GradedAlgebra& A, const Cochain& f) {
  int n = (int)f.slots.size() - 1;
  FrobeniusData fd = frobenius_data(A);
  Multilinear out = Multilinear::zeros(A.dim(), {n + 1});
  IndexIter it(A.dim(), n + 1);
  do {
    Rat v(0);
    IndexIter jt(A.dim(), n);
    bool first = n == 0;
    while (first || !jt.done) {
      first = false;
      std::vector<int> fi(n + 1);
      fi[0] = it.idx[0];
      Rat w(1);
      for (int t = 0; t < n; ++t) {
        fi[1 + t] = jt.idx[t];
        w *= fd.eta_inv[jt.idx[t]][it.idx[1 + t]];
      }
      if (!w.is_zero()) v += w * f.at(fi);
      if (n == 0) break;
      jt.next();
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain decoration_to_cochain(const GradedAlgebra& A, const Multilinear& D) {
  int n = D.slots.at(0) - 1;
  FrobeniusData fd = frobenius_data(A);
  Cochain out = cochain_zero(A, n);
  IndexIter it(A.dim(), n + 1);
  do {
    Rat v(0);
    IndexIter jt(A.dim(), n);
    bool first = n == 0;
    while (first || !jt.done) {
      first = false;
      std::vector<int> di(n + 1);
      di[0] = it.idx[0];
      Rat w(1);
      for (int t = 0; t < n; ++t) {
        di[1 + t] = jt.idx[t];
        w *= fd.eta[jt.idx[t]][it.idx[1 + t]];
      }
      if (!w.is_zero()) v += w * D.at(di);
      if (n == 0) break;
      jt.next();
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain d_hoch(const GradedAlgebra& A, const Cochain& f) {
  int n = (int)f.slots.size() - 1;
  Cochain out = cochain_zero(A, n + 1);
  IndexIter it(A.dim(), n + 2); // output + n+1 inputs
  do {
    Rat v(0);
    // a_1 f(a_2..a_{n+1}): output k from multiplying a_1 by f's output
    for (int k = 0; k < A.dim(); ++k) {
      std::vector<int> fi(n + 1);
      fi[0] = k;
      for (int t = 0; t < n; ++t) fi[1 + t] = it.idx[2 + t];
      Rat fv = f.at(fi);
      if (fv.is_zero()) continue;
      v += fv * A.mul_table[it.idx[1]][k][it.idx[0]];
    }
    // middle terms
    for (int i = 1; i <= n; ++i) {
      Rat term(0);
      for (int k = 0; k < A.dim(); ++k) {
        Rat mk = A.mul_table[it.idx[i]][it.idx[i + 1]][k];
        if (mk.is_zero()) continue;
        std::vector<int> fi(n + 1);
        fi[0] = it.idx[0];
        for (int t = 1; t < i; ++t) fi[t] = it.idx[t];
        fi[i] = k;
        for (int t = i + 1; t <= n; ++t) fi[t] = it.idx[t + 1];
        term += mk * f.at(fi);
      }
      v += Rat(i % 2 ? -1 : 1) * term;
    }
    // f(a_1..a_n) a_{n+1}
    {
      Rat term(0);
      for (int k = 0; k < A.dim(); ++k) {
        std::vector<int> fi(n + 1);
        fi[0] = k;
        for (int t = 0; t < n; ++t) fi[1 + t] = it.idx[1 + t];
        Rat fv = f.at(fi);
        if (fv.is_zero()) continue;
        term += fv * A.mul_table[k][it.idx[n + 1]][it.idx[0]];
      }
      v += Rat((n + 1) % 2 ? -1 : 1) * term;
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Multilinear d_cyc(const GradedAlgebra& A, const Multilinear& phi) {
  int N = phi.slots.at(0); // n+1 axes
  Multilinear out = Multilinear::zeros(A.dim(), {N + 1});
  if (N == 0) return out; // scalars are closed
  IndexIter it(A.dim(), N + 1); // a_0..a_{n+1}
  do {
    Rat v(0);
    for (int i = 0; i + 1 <= N; ++i) {
      Rat term(0);
      for (int k = 0; k < A.dim(); ++k) {
        Rat mk = A.mul_table[it.idx[i]][it.idx[i + 1]][k];
        if (mk.is_zero()) continue;
        std::vector<int> pi(N);
        for (int t = 0; t < i; ++t) pi[t] = it.idx[t];
        pi[i] = k;
        for (int t = i + 1; t < N; ++t) pi[t] = it.idx[t + 1];
        term += mk * phi.at(pi);
      }
      v += Rat(i % 2 ? -1 : 1) * term;
    }
    {
      Rat term(0);
      for (int k = 0; k < A.dim(); ++k) {
        Rat mk = A.mul_table[it.idx[N]][it.idx[0]][k];
        if (mk.is_zero()) continue;
        std::vector<int> pi(N);
        pi[0] = k;
        for (int t = 1; t < N; ++t) pi[t] = it.idx[t];
        term += mk * phi.at(pi);
      }
      v += Rat(N % 2 ? -1 : 1) * term;
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Multilinear d_cyc_transpose(const GradedAlgebra& A, const Multilinear& phi) {
  int N = phi.slots.at(0); // N axes in, N-1 axes out
  if (N < 1) throw std::invalid_argument("d_cyc_transpose: empty probe");
  Multilinear out = Multilinear::zeros(A.dim(), {N - 1});
  if (N == 1) return out;
  IndexIter it(A.dim(), N - 1);
  do {
    Multilinear delta = Multilinear::zeros(A.dim(), {N - 1});
    delta.at(it.idx) = Rat(1);
    Multilinear image = d_cyc(A, delta);
    Rat v(0);
    for (size_t t = 0; t < image.data.size(); ++t) v += image.data[t] * phi.data[t];
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Multilinear connes_B(const GradedAlgebra& A, const Multilinear& phi) {
  int N = phi.slots.at(0); // phi has N = n+1 axes; B lands in N-1 axes
  if (N < 2) return Multilinear::zeros(A.dim(), {0});
  int n = N - 1;
  Multilinear out = Multilinear::zeros(A.dim(), {n});
  IndexIter it(A.dim(), n);
  do {
    Rat v(0);
    for (int t = 0; t < n; ++t) {
      std::vector<int> pi(N);
      pi[0] = A.unit;
      for (int s = 0; s < n; ++s) pi[1 + s] = it.idx[(t + s) % n];
      // sign (-1)^{(n-1)t} times the Koszul sign of the rotation
      std::vector<int> degs(n), tgt(n);
      for (int s = 0; s < n; ++s) degs[s] = A.degrees[it.idx[s]];
      for (int s = 0; s < n; ++s) tgt[s] = (t + s) % n;
      int sign = ((n - 1) * t) % 2 ? -1 : 1;
      v += Rat(sign * koszul_sign(degs, tgt)) * phi.at(pi);
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain normalize_cochain(const GradedAlgebra& A, const Cochain& f) {
  Cochain out = f;
  IndexIter it(A.dim(), (int)f.slots.size());
  do {
    for (size_t t = 1; t < f.slots.size(); ++t)
      if (it.idx[t] == A.unit) out.at(it.idx) = Rat(0);
  } while (it.next());
  return out;
}

Multilinear normalize_cyclic(const GradedAlgebra& A, const Multilinear& phi) {
  Multilinear out = phi;
  IndexIter it(A.dim(), phi.slots.at(0));
  do {
    for (int t = 1; t < phi.slots.at(0); ++t)
      if (it.idx[t] == A.unit) out.at(it.idx) = Rat(0);
  } while (it.next());
  return out;
}

Cochain cup(const GradedAlgebra& A, const Cochain& f, const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  Cochain out = cochain_zero(A, n + m);
  IndexIter it(A.dim(), n + m + 1);
  do {
    Rat v(0);
    for (int kf = 0; kf < A.dim(); ++kf)
      for (int kg = 0; kg < A.dim(); ++kg) {
        Rat mk = A.mul_table[kf][kg][it.idx[0]];
        if (mk.is_zero()) continue;
        std::vector<int> fi(n + 1), gi(m + 1);
        fi[0] = kf;
        for (int t = 0; t < n; ++t) fi[1 + t] = it.idx[1 + t];
        gi[0] = kg;
        for (int t = 0; t < m; ++t) gi[1 + t] = it.idx[1 + n + t];
        v += mk * f.at(fi) * g.at(gi);
      }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain brace_i(const GradedAlgebra& A, const Cochain& f, int i,
                const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  if (i < 1 || i > n) throw std::invalid_argument("brace_i: slot out of range");
  Cochain out = cochain_zero(A, n + m - 1);
  IndexIter it(A.dim(), n + m);
  do {
    Rat v(0);
    for (int k = 0; k < A.dim(); ++k) {
      std::vector<int> gi(m + 1);
      gi[0] = k;
      for (int t = 0; t < m; ++t) gi[1 + t] = it.idx[i + t];
      Rat gv = g.at(gi);
      if (gv.is_zero()) continue;
      std::vector<int> fi(n + 1);
      fi[0] = it.idx[0];
      for (int t = 1; t < i; ++t) fi[t] = it.idx[t];
      fi[i] = k;
      for (int t = i + 1; t <= n; ++t) fi[t] = it.idx[t + m - 1];
      v += gv * f.at(fi);
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain brace(const GradedAlgebra& A, const Cochain& f, const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  Cochain out = cochain_zero(A, n + m - 1);
  for (int i = 1; i <= n; ++i) {
    Cochain term = brace_i(A, f, i, g);
    Rat sign((i - 1) * (m - 1) % 2 ? -1 : 1);
    term *= sign;
    out = out + term;
  }
  return out;
}

Cochain bracket(const GradedAlgebra& A, const Cochain& f, const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  Cochain fg = brace(A, f, g);
  Cochain gf = brace(A, g, f);
  Rat sign((n - 1) * (m - 1) % 2 ? -1 : 1);
  gf *= sign;
  return fg - gf;
}

Cochain sqcup(const GradedAlgebra& A, const Cochain& f, const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  Cochain out = cochain_zero(A, n + m + 1);
  IndexIter it(A.dim(), n + m + 2);
  do {
    Rat v(0);
    for (int kf = 0; kf < A.dim(); ++kf)
      for (int kg = 0; kg < A.dim(); ++kg) {
        std::vector<int> fi(n + 1), gi(m + 1);
        fi[0] = kf;
        for (int t = 0; t < n; ++t) fi[1 + t] = it.idx[1 + t];
        gi[0] = kg;
        for (int t = 0; t < m; ++t) gi[1 + t] = it.idx[2 + n + t];
        Rat fv = f.at(fi) * g.at(gi);
        if (fv.is_zero()) continue;
        // f(..) a_{n+1} g(..)
        for (int k1 = 0; k1 < A.dim(); ++k1) {
          Rat m1 = A.mul_table[kf][it.idx[n + 1]][k1];
          if (m1.is_zero()) continue;
          v += fv * m1 * A.mul_table[k1][kg][it.idx[0]];
        }
      }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

Cochain box_i(const GradedAlgebra& A, const Cochain& f, int i,
              const Cochain& g) {
  int n = (int)f.slots.size() - 1, m = (int)g.slots.size() - 1;
  if (i < 1 || i > n) throw std::invalid_argument("box_i: slot out of range");
  Cochain out = cochain_zero(A, n + m + 1);
  IndexIter it(A.dim(), n + m + 2);
  do {
    Rat v(0);
    for (int k = 0; k < A.dim(); ++k) {
      // sandwich a_i g(a_{i+1}..a_{i+m}) a_{i+m+1} into slot i of f
      std::vector<int> gi(m + 1);
      for (int kg = 0; kg < A.dim(); ++kg) {
        gi[0] = kg;
        for (int t = 0; t < m; ++t) gi[1 + t] = it.idx[i + 1 + t];
        Rat gv = g.at(gi);
        if (gv.is_zero()) continue;
        for (int k1 = 0; k1 < A.dim(); ++k1) {
          Rat m1 = A.mul_table[it.idx[i]][kg][k1];
          if (m1.is_zero()) continue;
          Rat m2 = A.mul_table[k1][it.idx[i + m + 1]][k];
          if (m2.is_zero()) continue;
          std::vector<int> fi(n + 1);
          fi[0] = it.idx[0];
          for (int t = 1; t < i; ++t) fi[t] = it.idx[t];
          fi[i] = k;
          for (int t = i + 1; t <= n; ++t) fi[t] = it.idx[t + m + 1];
          v += gv * m1 * m2 * f.at(fi);
        }
      }
    }
    if (!v.is_zero()) out.at(it.idx) = v;
  } while (it.next());
  return out;
}

// ---- tensor words -----------------------------------------------------------

std::string word_key(const Word& w) {
  std::ostringstream os;
  for (int x : w) os << x << ".";
  return os.str();
}
std::string word_pair_key(const Word& u, const Word& v) {
  return word_key(u) + "|" + word_key(v);
}
std::string word_triple_key(const WordTriple& t) {
  return word_key(t.left) + "|" + std::to_string(t.mid) + "|" +
         word_key(t.right);
}

Word mu_word(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

WordPairSum delta_word(const Word& w) {
  WordPairSum out;
  for (size_t i = 1; i < w.size(); ++i) {
    Word u(w.begin(), w.begin() + i), v(w.begin() + i, w.end());
    out.add(word_pair_key(u, v), {u, v}, Rat(1));
  }
  return out;
}

FormalSum<WordTriple> lozenge_word(const Word& w) {
  FormalSum<WordTriple> out;
  for (size_t i = 0; i < w.size(); ++i) {
    WordTriple t{Word(w.begin(), w.begin() + i), w[i],
                 Word(w.begin() + i + 1, w.end())};
    out.add(word_triple_key(t), t, Rat(1));
  }
  return out;
}

Word boxtimes_word(const Word& u, int mid, const Word& v) {
  Word out = u;
  out.push_back(mid);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string word_tuple_key(const WordTuple& t) {
  std::string s;
  for (const Word& w : t) s += word_key(w) + "|";
  return s;
}

FormalSum<WordTuple> delta_l_word(const Word& w, int l) {
  FormalSum<WordTuple> out;
  if (l == 0) {
    out.add(word_tuple_key({w}), {w}, Rat(1));
    return out;
  }
  for (const auto& [k, t] : delta_word(w).terms) {
    auto rest = delta_l_word(t.value.second, l - 1);
    for (const auto& [k2, t2] : rest.terms) {
      WordTuple tup = {t.value.first};
      tup.insert(tup.end(), t2.value.begin(), t2.value.end());
      out.add(word_tuple_key(tup), tup, t.coeff * t2.coeff);
    }
  }
  return out;
}

std::string lozenge_tuple_key(const LozengeTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.words.size(); ++i) {
    s += word_key(t.words[i]) + "|";
    if (i < t.mids.size()) s += std::to_string(t.mids[i]) + "|";
  }
  return s;
}

FormalSum<LozengeTuple> lozenge_l_word(const Word& w, int l) {
  FormalSum<LozengeTuple> out;
  if (l == 0) {
    LozengeTuple t{{w}, {}};
    out.add(lozenge_tuple_key(t), t, Rat(1));
    return out;
  }
  for (const auto& [k, t] : lozenge_word(w).terms) {
    auto rest = lozenge_l_word(t.value.right, l - 1);
    for (const auto& [k2, t2] : rest.terms) {
      LozengeTuple tup;
      tup.words.push_back(t.value.left);
      tup.mids.push_back(t.value.mid);
      tup.words.insert(tup.words.end(), t2.value.words.begin(),
                       t2.value.words.end());
      tup.mids.insert(tup.mids.end(), t2.value.mids.begin(),
                      t2.value.mids.end());
      out.add(lozenge_tuple_key(tup), tup, t.coeff * t2.coeff);
    }
  }
  return out;
}

Rat eta_words(const GradedAlgebra& A, const Word& u, const Word& v) {
  if (u.size() != v.size()) return Rat(0);
  FrobeniusData fd = frobenius_data(A);
  Rat out(1);
  int m = (int)u.size();
  for (int t = 0; t < m; ++t) out *= fd.eta[u[t]][v[m - 1 - t]];
  return out;
}

// ---- normal forms -----------------------------------------------------------

int op_degree(const PartitionedArcGraph& p) {
  auto part = partitioning_angles(p);
  int non_part = 0;
  for (char c : part)
    if (!c) ++non_part;
  if (non_part % 2) throw StructuralError("odd non-partitioning angle count");
  return non_part / 2 - 1;
}

namespace {

// runs of parallel copies at each boundary, with their flag axes
struct RunData {
  std::vector<std::vector<std::vector<Flag>>> runs_at; // per boundary
  std::vector<int> delta_counts;
};

RunData run_data(const PartitionedArcGraph& p) {
  RunData rd;
  auto part = partitioning_angles(p);
  const ArcGraph& g = p.g;
  rd.runs_at.resize(g.n_boundaries());
  rd.delta_counts.resize(g.n_boundaries());
  for (int b = 0; b < g.n_boundaries(); ++b) {
    const auto& flags = g.bnd[b];
    for (int s = 0; s < (int)flags.size(); ++s) {
      if (s == 0 || !part[flags[s - 1]]) rd.runs_at[b].push_back({});
      rd.runs_at[b].back().push_back(flags[s]);
    }
    rd.delta_counts[b] = std::max(0, (int)rd.runs_at[b].size() - 1);
  }
  return rd;
}

} // namespace

NormalForm normal_form_tensor(const GradedAlgebra& A,
                              const PartitionedArcGraph& p) {
  NormalForm nf;
  nf.degree_l = op_degree(p);
  RunData rd = run_data(p);
  nf.delta_counts = rd.delta_counts;
  nf.eta_powers = p.mult;
  // rebuild through the factored form: pair each base edge's two runs with
  // the reversed multi-pairing
  const ArcGraph& g = p.g;
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
  // base edge -> its two runs (ordered by incidence discovery)
  auto edges = edge_list(g);
  auto eo = edge_of_flag(g, edges);
  std::map<int, std::vector<std::vector<Flag>>> runs_of_base;
  for (int b = 0; b < g.n_boundaries(); ++b)
    for (const auto& run : rd.runs_at[b])
      runs_of_base[p.base_edge_of[eo[run[0]]]].push_back(run);
  IndexIter it(A.dim(), out.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    Rat v(1);
    for (auto& [be, runs] : runs_of_base) {
      if (runs.size() != 2) throw StructuralError("edge without two runs");
      const auto& r1 = runs[0];
      const auto& r2 = runs[1];
      int m = (int)r1.size();
      for (int t = 0; t < m && !v.is_zero(); ++t)
        v *= fd.eta[it.idx[pos[r1[t]]]][it.idx[pos[r2[m - 1 - t]]]];
      if (v.is_zero()) break;
    }
    if (!v.is_zero()) out.at(it.idx) = v;
    if (out.total_axes() == 0) break;
    it.next();
  }
  nf.reconstructed = out;
  return nf;
}

NormalForm normal_form_angle(const GradedAlgebra& A,
                             const PartitionedArcGraph& p) {
  NormalForm nf;
  nf.degree_l = op_degree(p);
  RunData rd = run_data(p);
  nf.delta_counts = rd.delta_counts;
  for (int m : p.mult) nf.eta_powers.push_back(m - 1);
  const ArcGraph& g = p.g;
  if (g.angle_marks)
    for (int m : *g.angle_marks)
      if (m != 1)
        throw std::invalid_argument("angle normal form needs constant marks");
  FrobeniusData fd = frobenius_data(A);
  auto part = partitioning_angles(p);
  FlagIndex gix = index_flags(g);
  // polygon factor decorations: non-partitioning angles along each base
  // region; eta factors: partitioning runs of each edge, paired reversed
  std::vector<int> slots;
  for (int b = 0; b < g.n_boundaries(); ++b)
    slots.push_back((int)marked_angle_axes(g, b).size());
  Multilinear out = Multilinear::zeros(A.dim(), slots);
  std::map<Flag, int> pos;
  {
    int t = 0;
    for (int b = 0; b < g.n_boundaries(); ++b)
      for (Flag f : marked_angle_axes(g, b)) pos[f] = t++;
  }
  // partitioning angle runs per base edge end: consecutive partitioning
  // angles between copies
  auto edges = edge_list(g);
  auto eo = edge_of_flag(g, edges);
  std::map<int, std::vector<std::vector<Flag>>> part_runs;
  for (int b = 0; b < g.n_boundaries(); ++b) {
    for (const auto& run : rd.runs_at[b]) {
      std::vector<Flag> angles;
      for (size_t s = 0; s + 1 < run.size(); ++s) angles.push_back(run[s]);
      part_runs[p.base_edge_of[eo[run[0]]]].push_back(angles);
    }
  }
  // non-partitioning sides per underlying region, in base cycle order: walk
  // the base regions and map base angles to expanded run-end angles
  // expanded angle of base angle: the last flag of the corresponding run
  std::map<Flag, Flag> run_end_of_base_flag;
  {
    // base flags are created in boundary order by make_partitioned
    int next = 0;
    for (int b = 0; b < g.n_boundaries(); ++b)
      for (const auto& run : rd.runs_at[b]) run_end_of_base_flag[next++] = run.back();
  }
  IndexIter it(A.dim(), out.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    Rat v(1);
    for (const auto& r : p.base.regions) {
      std::vector<Vec> sides;
      for (const auto& c : r.cycles)
        for (Flag f : c) {
          Flag base_angle = p.base.inv[f];
          sides.push_back(A.basis_vec(it.idx[pos[run_end_of_base_flag[base_angle]]]));
        }
      int cycles = (int)(r.cycles.size() + r.isolated.size());
      v *= y_surface(A, r.genus, cycles,
                     sides.empty() ? std::vector<Vec>{A.unit_vec()} : sides);
      if (v.is_zero()) break;
    }
    for (auto& [be, runs] : part_runs) {
      if (v.is_zero()) break;
      if (runs.size() != 2) throw StructuralError("edge without two runs");
      int m = (int)runs[0].size();
      for (int t = 0; t < m && !v.is_zero(); ++t)
        v *= fd.eta[it.idx[pos[runs[0][t]]]][it.idx[pos[runs[1][m - 1 - t]]]];
    }
    if (!v.is_zero()) out.at(it.idx) = v;
    if (out.total_axes() == 0) break;
    it.next();
  }
  (void)gix;
  (void)part;
  nf.reconstructed = out;
  return nf;
}

} // namespace arcops
