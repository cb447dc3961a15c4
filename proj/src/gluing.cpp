#include "arcops/gluing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "arcops/sign.hpp"

namespace arcops {

namespace {

struct UF {
  std::vector<int> up;
  explicit UF(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// worker: glue boundaries bi and bj of one graph (possibly a disjoint union
// whose ambient genus field is meaningless); returns the result with
// boundaries renumbered order-preservingly and the loop count.
struct SeamResult {
  int closed_loops = 0;
  std::optional<ArcGraph> graph;
};

SeamResult glue_seam(const ArcGraph& u, int bi, int bj) {
  SeamResult res;
  const int c = (int)u.bnd[bi].size();
  if ((int)u.bnd[bj].size() != c) throw StructuralError("unmatched seam");
  FlagIndex ix = index_flags(u);

  // orbit/region lookup on the input
  auto orbs = region_walk(u);
  std::vector<int> orbit_of(u.n_flags(), -1);
  for (int i = 0; i < (int)orbs.size(); ++i)
    for (Flag f : orbs[i]) orbit_of[f] = i;
  std::vector<int> region_of_orbit(orbs.size(), -1);
  for (int r = 0; r < (int)u.regions.size(); ++r)
    for (const auto& cy : u.regions[r].cycles) {
      auto cc = cy;
      auto it = std::min_element(cc.begin(), cc.end());
      std::rotate(cc.begin(), it, cc.end());
      for (int i = 0; i < (int)orbs.size(); ++i)
        if (orbs[i] == cc) region_of_orbit[i] = r;
    }
  for (int r : region_of_orbit)
    if (r < 0) throw StructuralError("glue: regions do not match orbits");
  std::vector<int> region_of_isolated(u.n_boundaries(), -1);
  for (int r = 0; r < (int)u.regions.size(); ++r)
    for (int b : u.regions[r].isolated) region_of_isolated[b] = r;

  const int R = (int)u.regions.size();
  UF uf(R);
  std::vector<std::pair<int, int>> chi_merges; // interval gluings

  // partner map along the seam: reverse at bi
  std::vector<int> partner(u.n_flags(), -1);
  std::vector<char> seam(u.n_flags(), 0);
  for (int t = 0; t < c; ++t) {
    Flag x = u.bnd[bi][c - 1 - t], y = u.bnd[bj][t];
    partner[x] = y;
    partner[y] = x;
    seam[x] = seam[y] = 1;
  }

  if (c == 0) {
    // empty boundary glued to empty boundary: the containing regions merge
    // along a circle
    int ra = region_of_isolated[bi], rb = region_of_isolated[bj];
    if (ra < 0 || rb < 0) throw StructuralError("glue: isolated region lost");
    uf.unite(ra, rb);
  } else {
    // the angle of bnd[bi][s] is identified with the angle of
    // bnd[bj][(c-2-s) mod c]
    auto region_of_angle = [&](int b, int s) {
      Flag next = u.bnd[b][(s + 1) % c];
      return region_of_orbit[orbit_of[next]];
    };
    for (int s = 0; s < c; ++s) {
      int ra = region_of_angle(bi, s);
      int rb = region_of_angle(bj, ((c - 2 - s) % c + c) % c);
      chi_merges.push_back({ra, rb});
      uf.unite(ra, rb);
    }
  }

  // resolve chains to build the new involution; detect closed loops
  std::vector<Flag> kept;
  std::vector<int> rename(u.n_flags(), -1);
  for (int b = 0; b < u.n_boundaries(); ++b) {
    if (b == bi || b == bj) continue;
    for (Flag f : u.bnd[b]) {
      rename[f] = (int)kept.size();
      kept.push_back(f);
    }
  }
  if (kept.empty()) {
    // count the loops: every arc chain is closed
    std::vector<char> seen(u.n_flags(), 0);
    for (int f = 0; f < u.n_flags(); ++f) {
      if (seen[f] || !seam[f]) continue;
      Flag x = f;
      while (!seen[x]) {
        seen[x] = 1;
        seen[partner[x]] = 1;
        x = u.inv[partner[x]];
      }
      res.closed_loops++;
      // merge across the vanished loop
      uf.unite(region_of_orbit[orbit_of[f]],
               region_of_orbit[orbit_of[u.inv[f]]]);
    }
    res.graph.reset();
    return res;
  }

  ArcGraph h;
  h.bnd.resize(u.n_boundaries() - 2);
  {
    int nb = 0;
    for (int b = 0; b < u.n_boundaries(); ++b) {
      if (b == bi || b == bj) continue;
      for (Flag f : u.bnd[b]) h.bnd[nb].push_back(rename[f]);
      ++nb;
    }
  }
  h.inv.assign(kept.size(), -1);
  std::vector<char> chained(u.n_flags(), 0);
  for (Flag f : kept) {
    Flag g = u.inv[f];
    while (seam[g]) {
      chained[g] = 1;
      chained[partner[g]] = 1;
      g = u.inv[partner[g]];
    }
    h.inv[rename[f]] = rename[g];
  }
  // closed loops: seam flags never reached from a kept flag
  {
    std::vector<char> seen(u.n_flags(), 0);
    for (int f = 0; f < u.n_flags(); ++f) {
      if (!seam[f] || chained[f] || seen[f]) continue;
      Flag x = f;
      while (!seen[x]) {
        seen[x] = 1;
        seen[partner[x]] = 1;
        x = u.inv[partner[x]];
      }
      res.closed_loops++;
      uf.unite(region_of_orbit[orbit_of[f]],
               region_of_orbit[orbit_of[u.inv[f]]]);
    }
  }

  // group data
  std::vector<int> chi(R), cyc_count(R, 0);
  for (int r = 0; r < R; ++r) chi[r] = region_chi(u.regions[r]);
  std::vector<int> group_chi(R, 0);
  std::vector<std::vector<int>> group_members(R);
  for (int r = 0; r < R; ++r) {
    group_chi[uf.find(r)] += chi[r];
    group_members[uf.find(r)].push_back(r);
  }
  for (auto& [ra, rb] : chi_merges) group_chi[uf.find(ra)] -= 1;

  auto new_orbs = region_walk(h);
  std::vector<int> old_of_new(kept.size());
  for (int i = 0; i < (int)kept.size(); ++i) old_of_new[rename[kept[i]]] = kept[i];
  std::map<int, Region> group_region;
  std::map<int, int> group_cycles;
  for (const auto& o : new_orbs) {
    int old_region = region_of_orbit[orbit_of[old_of_new[o[0]]]];
    int g = uf.find(old_region);
    group_region[g].cycles.push_back(o);
  }
  // isolated boundaries carry over (relabelled below)
  for (int r = 0; r < R; ++r)
    for (int b : u.regions[r].isolated)
      if (b != bi && b != bj) group_region[uf.find(r)].isolated.push_back(b);

  // genus per group from its intrinsic Euler characteristic
  for (auto& [g, reg] : group_region) {
    int cycles = (int)(reg.cycles.size() + reg.isolated.size());
    int twoGen = 2 - group_chi[g] - cycles;
    if (twoGen < 0 || twoGen % 2)
      throw StructuralError("glue: region genus bookkeeping failed");
    reg.genus = twoGen / 2;
    group_cycles[g] = cycles;
  }
  // groups whose boundary was consumed entirely cannot occur with arcs left
  for (int r = 0; r < R; ++r)
    if (!group_region.count(uf.find(r)))
      throw StructuralError("glue: closed region piece");

  // boundary renumbering map for isolated labels
  std::vector<int> label_map(u.n_boundaries(), -1);
  {
    int nb = 0;
    for (int b = 0; b < u.n_boundaries(); ++b) {
      if (b == bi || b == bj) continue;
      label_map[b] = nb++;
    }
  }
  for (auto& [g, reg] : group_region) {
    for (int& b : reg.isolated) b = label_map[b];
    h.regions.push_back(reg);
  }

  int chi_sum = 0;
  for (const auto& r : h.regions) chi_sum += region_chi(r);
  // for a still-disconnected union this "genus" is the reduced bookkeeping
  // value; it becomes the honest genus once everything is connected
  int twoG = 2 - h.n_boundaries() - (chi_sum - h.n_arcs());
  if (twoG % 2) throw StructuralError("glue: genus parity");
  h.genus = twoG / 2;

  // marks: io and angle marks restricted to the surviving flags/boundaries
  if (u.io) {
    std::vector<IOMark> io;
    for (int b = 0; b < u.n_boundaries(); ++b)
      if (b != bi && b != bj) io.push_back((*u.io)[b]);
    h.io = io;
  }
  if (u.angle_marks) {
    std::vector<int> am(kept.size(), 0);
    for (Flag f : kept) am[rename[f]] = (*u.angle_marks)[f];
    h.angle_marks = am;
  }
  (void)ix;
  res.graph = canonicalize(h);
  return res;
}

ArcGraph disjoint_union(const ArcGraph& a, const ArcGraph& b) {
  ArcGraph u;
  u.bnd = a.bnd;
  int off = a.n_flags();
  for (const auto& bb : b.bnd) {
    u.bnd.emplace_back();
    for (Flag f : bb) u.bnd.back().push_back(f + off);
  }
  u.inv = a.inv;
  for (Flag f : b.inv) u.inv.push_back(f + off);
  u.regions = a.regions;
  for (const auto& r : b.regions) {
    Region nr;
    nr.genus = r.genus;
    for (const auto& cy : r.cycles) {
      std::vector<Flag> nc;
      for (Flag f : cy) nc.push_back(f + off);
      nr.cycles.push_back(nc);
    }
    for (int bb : r.isolated) nr.isolated.push_back(bb + a.n_boundaries());
    u.regions.push_back(nr);
  }
  u.genus = 0; // meaningless for the disconnected union
  if (a.io && b.io) {
    std::vector<IOMark> io = *a.io;
    io.insert(io.end(), b.io->begin(), b.io->end());
    u.io = io;
  }
  if (a.angle_marks && b.angle_marks) {
    std::vector<int> am = *a.angle_marks;
    am.insert(am.end(), b.angle_marks->begin(), b.angle_marks->end());
    u.angle_marks = am;
  }
  return u;
}

// splice labels: the result of glue_seam is ordered (a minus i, b minus 0);
// the operadic convention wants (a_0..a_{i-1}, b_1..b_n, a_{i+1}..a_m)
ArcGraph splice_labels(const ArcGraph& g, int i, int m, int n) {
  // current order: a0..a_{i-1}, a_{i+1}..a_m, b1..b_n
  std::vector<int> perm(g.n_boundaries());
  for (int t = 0; t < i; ++t) perm[t] = t;
  for (int t = 0; t < m - i; ++t) perm[i + t] = i + n + t;
  for (int t = 0; t < n; ++t) perm[m + t] = i + t;
  return canonicalize(relabel_boundaries(g, perm));
}

} // namespace

int partitioned_degree(const ArcGraph& expanded) {
  return make_partitioned(expanded).degree();
}

GlueResult glue_raw(const ArcGraph& a, int i, const ArcGraph& b, int j) {
  GlueResult res;
  if (i < 0 || i >= a.n_boundaries() || j < 0 || j >= b.n_boundaries())
    throw std::invalid_argument("glue: boundary out of range");
  if (a.bnd[i].size() != b.bnd[j].size()) return res;
  res.matched = true;
  PartitionedArcGraph pa = make_partitioned(a), pb = make_partitioned(b);
  res.both_twisted =
      is_twisted_at(pa.base, i) && is_twisted_at(pb.base, j);
  ArcGraph u = disjoint_union(a, b);
  SeamResult sr = glue_seam(u, i, a.n_boundaries() + j);
  res.closed_loops = sr.closed_loops;
  if (sr.graph && j == 0)
    sr.graph = splice_labels(*sr.graph, i, a.n_boundaries() - 1,
                             b.n_boundaries() - 1);
  res.graph = sr.graph;
  return res;
}

GlueResult self_glue_raw(const ArcGraph& a, int i, int j) {
  GlueResult res;
  if (i == j || i < 0 || j < 0 || i >= a.n_boundaries() ||
      j >= a.n_boundaries())
    throw std::invalid_argument("self_glue: bad boundaries");
  if (a.bnd[i].size() != a.bnd[j].size()) return res;
  res.matched = true;
  PartitionedArcGraph pa = make_partitioned(a);
  res.both_twisted = is_twisted_at(pa.base, i) && is_twisted_at(pa.base, j);
  SeamResult sr = glue_seam(a, i, j);
  res.closed_loops = sr.closed_loops;
  if (sr.graph) res.graph = canonicalize(*sr.graph);
  return res;
}

namespace {

// flag groups at a boundary under the angle marking: maximal cyclic runs
// joined by 0-marked angles.  Returns nullopt when a group wraps the outside
// angle (gluing undefined, treated as degenerate).
std::optional<std::vector<std::vector<Flag>>> angle_groups(const ArcGraph& g,
                                                           int b) {
  if (!g.angle_marks) throw std::invalid_argument("angle gluing needs marks");
  const auto& flags = g.bnd[b];
  int c = (int)flags.size();
  if (c == 0) return std::vector<std::vector<Flag>>{};
  if ((*g.angle_marks)[flags[c - 1]] == 0) return std::nullopt; // wraps
  std::vector<std::vector<Flag>> groups;
  groups.push_back({flags[0]});
  for (int s = 1; s < c; ++s) {
    if ((*g.angle_marks)[flags[s - 1]] == 0)
      groups.back().push_back(flags[s]);
    else
      groups.push_back({flags[s]});
  }
  return groups;
}

struct AnglePrep {
  bool matched = false;
  bool degenerate = false;
  ArcGraph a, b; // pre-expanded
  bool self_mode = false;
};

// pre-expand lone flags against larger groups so the seam becomes a plain
// reversed flag matching
AnglePrep angle_prepare(const ArcGraph& a0, int i, const ArcGraph& b0, int j,
                        bool self_mode) {
  AnglePrep out;
  out.self_mode = self_mode;
  auto ga = angle_groups(a0, i);
  auto gb = angle_groups(self_mode ? a0 : b0, j);
  if (!ga || !gb) {
    out.degenerate = true;
    return out;
  }
  int K = (int)ga->size();
  if ((int)gb->size() != K) return out; // not angle matched -> zero
  out.matched = true;
  // perfect matching check: group t on a meets group K-1-t on b
  std::vector<int> need_a(K, 1), need_b(K, 1);
  for (int t = 0; t < K; ++t) {
    int la = (int)(*ga)[t].size(), lb = (int)(*gb)[K - 1 - t].size();
    if (la > 1 && lb > 1) {
      out.degenerate = true;
      return out;
    }
    if (la == 1 && lb > 1) need_a[t] = lb;
    if (lb == 1 && la > 1) need_b[K - 1 - t] = la;
  }
  // duplicate lone flags: multiplicity per expanded edge; nullopt when one
  // edge would need two different fan-outs (gluing undefined)
  auto dup = [&](const ArcGraph& g,
                 const std::vector<std::vector<Flag>>& groups,
                 const std::vector<int>& need) -> std::optional<ArcGraph> {
    auto edges = edge_list(g);
    auto eo = edge_of_flag(g, edges);
    std::vector<int> mult(edges.size(), 1);
    for (int t = 0; t < (int)groups.size(); ++t) {
      if ((int)groups[t].size() == 1 && need[t] > 1) {
        int e = eo[groups[t][0]];
        if (mult[e] != 1) return std::nullopt;
        mult[e] = need[t];
      }
    }
    bool any = false;
    for (int m : mult) any |= m > 1;
    if (!any) return g;
    return expand_edges(g, mult, 0); // fan-out angles marked 0
  };
  if (self_mode) {
    // both duplications act on one graph
    std::vector<int> need_total;
    ArcGraph g = a0;
    auto edges = edge_list(g);
    auto eo = edge_of_flag(g, edges);
    std::vector<int> mult(edges.size(), 1);
    for (int t = 0; t < K; ++t) {
      int la = (int)(*ga)[t].size(), lb = (int)(*gb)[K - 1 - t].size();
      if (la == 1 && lb > 1) {
        int e = eo[(*ga)[t][0]];
        if (mult[e] != 1) {
          out.degenerate = true;
          return out;
        }
        mult[e] = lb;
      }
      if (lb == 1 && la > 1) {
        int e = eo[(*gb)[K - 1 - t][0]];
        if (mult[e] != 1) {
          out.degenerate = true;
          return out;
        }
        mult[e] = la;
      }
    }
    bool any = false;
    for (int m : mult) any |= m > 1;
    out.a = any ? expand_edges(g, mult, 0) : g;
    return out;
  }
  auto da = dup(a0, *ga, need_a);
  auto db = dup(b0, *gb, need_b);
  if (!da || !db) {
    out.degenerate = true;
    return out;
  }
  out.a = *da;
  out.b = *db;
  return out;
}

// after pre-expansion the seam must be a plain reversed matching whose angle
// marks correspond segment by segment
bool seam_marks_align(const ArcGraph& a, int i, const ArcGraph& b, int j) {
  int c = (int)a.bnd[i].size();
  if ((int)b.bnd[j].size() != c) return false;
  if (c == 0) return true;
  for (int s = 0; s < c; ++s) {
    int ma = (*a.angle_marks)[a.bnd[i][s]];
    int mb = (*b.angle_marks)[b.bnd[j][((c - 2 - s) % c + c) % c]];
    if (ma != mb) return false;
  }
  return true;
}

bool angle_both_twisted(const ArcGraph& a, int i, const ArcGraph& b, int j) {
  PartitionedArcGraph pa = make_partitioned(a), pb = make_partitioned(b);
  return is_twisted_partitioned(pa, i) && is_twisted_partitioned(pb, j);
}

} // namespace

GlueResult angle_glue_raw(const ArcGraph& a, int i, const ArcGraph& b, int j) {
  GlueResult res;
  if (i < 0 || i >= a.n_boundaries() || j < 0 || j >= b.n_boundaries())
    throw std::invalid_argument("angle_glue: boundary out of range");
  AnglePrep prep = angle_prepare(a, i, b, j, false);
  res.degenerate = prep.degenerate;
  res.matched = prep.matched;
  if (!prep.matched || prep.degenerate) return res;
  res.both_twisted = angle_both_twisted(a, i, b, j);
  if (!seam_marks_align(prep.a, i, prep.b, j)) {
    res.degenerate = true;
    return res;
  }
  ArcGraph u = disjoint_union(prep.a, prep.b);
  SeamResult sr = glue_seam(u, i, prep.a.n_boundaries() + j);
  res.closed_loops = sr.closed_loops;
  if (sr.graph && j == 0)
    sr.graph = splice_labels(*sr.graph, i, a.n_boundaries() - 1,
                             b.n_boundaries() - 1);
  res.graph = sr.graph;
  return res;
}

GlueResult angle_self_glue_raw(const ArcGraph& a, int i, int j) {
  GlueResult res;
  if (i == j || i < 0 || j < 0 || i >= a.n_boundaries() ||
      j >= a.n_boundaries())
    throw std::invalid_argument("angle_self_glue: bad boundaries");
  AnglePrep prep = angle_prepare(a, i, a, j, true);
  res.degenerate = prep.degenerate;
  res.matched = prep.matched;
  if (!prep.matched || prep.degenerate) return res;
  {
    PartitionedArcGraph pa = make_partitioned(a);
    res.both_twisted =
        is_twisted_partitioned(pa, i) && is_twisted_partitioned(pa, j);
  }
  if (!seam_marks_align(prep.a, i, prep.a, j)) {
    res.degenerate = true;
    return res;
  }
  SeamResult sr = glue_seam(prep.a, i, j);
  res.closed_loops = sr.closed_loops;
  if (sr.graph) res.graph = canonicalize(*sr.graph);
  return res;
}

static std::optional<ArcGraph> apply_mode(const GlueResult& r, GlueMode mode) {
  if (!r.matched || r.degenerate) return std::nullopt;
  if (mode == GlueMode::topological && r.both_twisted) return std::nullopt;
  if (r.closed_loops > 0) return std::nullopt;
  return r.graph;
}

std::optional<ArcGraph> glue(const ArcGraph& a, int i, const ArcGraph& b,
                             int j, GlueMode mode) {
  return apply_mode(glue_raw(a, i, b, j), mode);
}
std::optional<ArcGraph> self_glue(const ArcGraph& a, int i, int j,
                                  GlueMode mode) {
  return apply_mode(self_glue_raw(a, i, j), mode);
}
std::optional<ArcGraph> angle_glue(const ArcGraph& a, int i, const ArcGraph& b,
                                   int j, GlueMode mode) {
  return apply_mode(angle_glue_raw(a, i, b, j), mode);
}

std::optional<ArcGraph> prop_compose(
    const std::vector<ArcGraph>& graphs,
    const std::vector<std::pair<BoundaryRef, BoundaryRef>>& pairs,
    GlueMode mode, bool use_angle) {
  if (graphs.empty()) throw std::invalid_argument("prop_compose: no graphs");
  ArcGraph u = graphs[0];
  std::vector<int> offset(graphs.size(), 0);
  for (int g = 1; g < (int)graphs.size(); ++g) {
    offset[g] = u.n_boundaries();
    u = disjoint_union(u, graphs[g]);
  }
  // absolute labels, updated as boundaries disappear
  std::vector<int> live(u.n_boundaries());
  std::iota(live.begin(), live.end(), 0);
  auto current = [&](const BoundaryRef& r) {
    int abs = offset[r.graph] + r.boundary;
    for (int t = 0; t < (int)live.size(); ++t)
      if (live[t] == abs) return t;
    return -1;
  };
  for (const auto& [out_ref, in_ref] : pairs) {
    int bi = current(out_ref), bj = current(in_ref);
    if (bi < 0 || bj < 0)
      throw std::invalid_argument("prop_compose: boundary reused");
    GlueResult r = use_angle ? angle_self_glue_raw(u, bi, bj)
                             : self_glue_raw(u, bi, bj);
    auto g = apply_mode(r, mode);
    if (!g) return std::nullopt;
    // glue_seam renumbers order-preservingly, canonicalize keeps labels
    std::vector<int> nl;
    for (int t = 0; t < (int)live.size(); ++t)
      if (t != bi && t != bj) nl.push_back(live[t]);
    live = nl;
    u = *g;
  }
  return canonicalize(u);
}

int composition_sign(const ArcGraph& x, const ArcGraph& y,
                     const ArcGraph& result) {
  return expansion_sign(make_partitioned(x).mult) *
         expansion_sign(make_partitioned(y).mult) *
         expansion_sign(make_partitioned(result).mult);
}

FormalSum<ArcGraph> compose_sums(const FormalSum<ArcGraph>& x, int i,
                                 const FormalSum<ArcGraph>& y, GlueMode mode,
                                 bool use_angle, int weight_cap) {
  FormalSum<ArcGraph> out;
  for (const auto& [kx, tx] : x.terms)
    for (const auto& [ky, ty] : y.terms) {
      GlueResult r = use_angle ? angle_glue_raw(tx.value, i, ty.value, 0)
                               : glue_raw(tx.value, i, ty.value, 0);
      auto g = apply_mode(r, mode);
      if (!g) continue;
      if (weight_cap >= 0 && g->n_arcs() > weight_cap) continue;
      Rat c = tx.coeff * ty.coeff *
              Rat(composition_sign(tx.value, ty.value, *g));
      out.add(canonical_key(*g), *g, c);
    }
  return out;
}

FormalSum<ArcGraph> graded_compose(const FormalSum<ArcGraph>& x, int i,
                                   const FormalSum<ArcGraph>& y,
                                   bool use_angle) {
  auto degree_of = [&](const FormalSum<ArcGraph>& s) {
    int d = -2;
    for (const auto& [k, t] : s.terms) {
      int dt = partitioned_degree(t.value);
      if (d == -2) d = dt;
      if (d != dt)
        throw std::invalid_argument("graded_compose: inhomogeneous input");
    }
    return d;
  };
  int dx = degree_of(x), dy = degree_of(y);
  FormalSum<ArcGraph> out;
  if (dx == -2 || dy == -2) return out;
  int top = dx + dy;
  for (const auto& [kx, tx] : x.terms)
    for (const auto& [ky, ty] : y.terms) {
      GlueResult r = use_angle ? angle_glue_raw(tx.value, i, ty.value, 0)
                               : glue_raw(tx.value, i, ty.value, 0);
      auto g = apply_mode(r, GlueMode::algebraic);
      if (!g) continue;
      if (partitioned_degree(*g) != top) continue;
      out.add(canonical_key(*g), *g, tx.coeff * ty.coeff);
    }
  return out;
}

} // namespace arcops
