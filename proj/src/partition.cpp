#include "arcops/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "arcops/sign.hpp"

namespace arcops {

namespace {

struct OrbitIndex {
  std::vector<std::vector<Flag>> orbits;
  std::vector<int> orbit_of; // per flag
  std::vector<int> region_of_orbit;
};

OrbitIndex orbit_index(const ArcGraph& g) {
  OrbitIndex oi;
  oi.orbits = region_walk(g);
  oi.orbit_of.assign(g.n_flags(), -1);
  for (int i = 0; i < (int)oi.orbits.size(); ++i)
    for (Flag f : oi.orbits[i]) oi.orbit_of[f] = i;
  oi.region_of_orbit.assign(oi.orbits.size(), -1);
  for (int r = 0; r < (int)g.regions.size(); ++r)
    for (const auto& c : g.regions[r].cycles) {
      auto cc = c;
      auto it = std::min_element(cc.begin(), cc.end());
      std::rotate(cc.begin(), it, cc.end());
      for (int i = 0; i < (int)oi.orbits.size(); ++i)
        if (oi.orbits[i] == cc) oi.region_of_orbit[i] = r;
    }
  for (int r : oi.region_of_orbit)
    if (r < 0) throw StructuralError("regions do not cover the walk orbits");
  return oi;
}

// parallel square = disk region [ArcSide, inner Angle, ArcSide, inner Angle]
// between two distinct arcs
bool parallel_square(const ArcGraph& g, const FlagIndex& ix,
                     const OrbitIndex& oi, int orbit) {
  const auto& o = oi.orbits[orbit];
  if (o.size() != 2) return false;
  Flag x = o[0], y = o[1];
  if (g.inv[x] == y) return false;
  const Region& r = g.regions[oi.region_of_orbit[orbit]];
  if (r.genus != 0 || r.cycles.size() != 1 || !r.isolated.empty()) return false;
  auto inner = [&](Flag h) {
    return ix.pos[h] + 1 < (int)g.bnd[ix.boundary[h]].size();
  };
  return inner(g.inv[x]) && inner(g.inv[y]);
}

} // namespace

PartitionedArcGraph make_partitioned(const ArcGraph& expanded) {
  PartitionedArcGraph p;
  p.g = canonicalize(expanded);
  const ArcGraph& g = p.g;
  FlagIndex ix = index_flags(g);
  OrbitIndex oi = orbit_index(g);
  auto edges = edge_list(g);
  auto eo = edge_of_flag(g, edges);

  std::vector<char> square(oi.orbits.size(), 0);
  for (int i = 0; i < (int)oi.orbits.size(); ++i)
    square[i] = parallel_square(g, ix, oi, i);

  // partitioning angle at flag x <=> the orbit of inv(x) is a square
  auto part_angle = [&](Flag x) { return (bool)square[oi.orbit_of[g.inv[x]]]; };

  // runs: maximal blocks of consecutive flags joined by partitioning angles
  // (partitioning angles are never outside angles, so runs do not wrap)
  std::vector<int> run_of(g.n_flags(), -1);
  std::vector<std::vector<Flag>> runs;
  for (const auto& b : g.bnd) {
    for (int s = 0; s < (int)b.size(); ++s) {
      if (s == 0 || !part_angle(b[s - 1])) runs.push_back({});
      run_of[b[s]] = (int)runs.size() - 1;
      runs.back().push_back(b[s]);
    }
  }
  // the run partner: runs pair up under the involution, orientation reversed
  std::vector<int> run_partner(runs.size(), -1);
  for (int r = 0; r < (int)runs.size(); ++r) {
    int pr = run_of[g.inv[runs[r][0]]];
    run_partner[r] = pr;
    if (runs[pr].size() != runs[r].size())
      throw StructuralError("parallel runs of unequal length");
    for (int t = 0; t < (int)runs[r].size(); ++t)
      if (run_of[g.inv[runs[r][t]]] != pr ||
          g.inv[runs[r][t]] != runs[pr][(int)runs[pr].size() - 1 - t])
        throw StructuralError("parallel runs are not nested");
  }

  // base graph: one flag per run
  ArcGraph base;
  base.genus = g.genus;
  base.bnd.resize(g.n_boundaries());
  std::vector<int> base_flag_of_run(runs.size(), -1);
  {
    int next = 0;
    for (int b = 0; b < g.n_boundaries(); ++b) {
      int last_run = -1;
      for (Flag f : g.bnd[b]) {
        if (run_of[f] != last_run) {
          last_run = run_of[f];
          base_flag_of_run[last_run] = next++;
          base.bnd[b].push_back(base_flag_of_run[last_run]);
        }
      }
    }
    base.inv.assign(next, -1);
    for (int r = 0; r < (int)runs.size(); ++r)
      base.inv[base_flag_of_run[r]] = base_flag_of_run[run_partner[r]];
  }

  // base regions: map base orbits to expanded regions through the
  // non-partitioning angles
  OrbitIndex boi;
  boi.orbits = region_walk(base);
  boi.orbit_of.assign(base.n_flags(), -1);
  for (int i = 0; i < (int)boi.orbits.size(); ++i)
    for (Flag f : boi.orbits[i]) boi.orbit_of[f] = i;

  // base angle at base flag of run r <-> expanded angle at last flag of run r
  std::vector<int> region_of_base_orbit(boi.orbits.size(), -1);
  FlagIndex bix = index_flags(base);
  for (int r = 0; r < (int)runs.size(); ++r) {
    Flag x = runs[r].back(); // expanded angle (x, succ x): non-partitioning
    Flag bx = base_flag_of_run[r];
    int exp_region = oi.region_of_orbit[oi.orbit_of[succ_flag(g, ix, x)]];
    int borb = boi.orbit_of[succ_flag(base, bix, bx)];
    if (region_of_base_orbit[borb] != -1 &&
        region_of_base_orbit[borb] != exp_region)
      throw StructuralError("inconsistent region collapse");
    region_of_base_orbit[borb] = exp_region;
  }
  // expanded regions that are not squares become base regions
  std::map<int, int> base_region_of;
  for (int r = 0; r < (int)g.regions.size(); ++r) {
    bool sq = false;
    for (int i = 0; i < (int)oi.orbits.size(); ++i)
      if (square[i] && oi.region_of_orbit[i] == r) sq = true;
    if (!sq) {
      base_region_of[r] = (int)base.regions.size();
      Region nr;
      nr.genus = g.regions[r].genus;
      nr.isolated = g.regions[r].isolated;
      base.regions.push_back(nr);
    }
  }
  for (int i = 0; i < (int)boi.orbits.size(); ++i) {
    auto it = base_region_of.find(region_of_base_orbit[i]);
    if (it == base_region_of.end())
      throw StructuralError("base orbit collapsed into a square");
    base.regions[it->second].cycles.push_back(boi.orbits[i]);
  }
  base.io = g.io;
  if (g.angle_marks) {
    std::vector<int> am(base.n_flags(), 0);
    for (int r = 0; r < (int)runs.size(); ++r)
      am[base_flag_of_run[r]] = (*g.angle_marks)[runs[r].back()];
    base.angle_marks = am;
  }
  p.base = canonicalize(base);
  {
    // canonicalize() renames base flags by boundary order; recompute the map
    std::vector<int> rename(base.n_flags(), -1);
    int next = 0;
    for (const auto& bb : base.bnd)
      for (Flag f : bb) rename[f] = next++;
    // rename is identity here because base flags were created in order; keep
    // the check cheap
    for (int f = 0; f < base.n_flags(); ++f)
      if (rename[f] != f) throw StructuralError("base flag order broken");
  }

  // multiplicities and copy indices
  auto bedges = edge_list(p.base);
  auto beo = edge_of_flag(p.base, bedges);
  p.mult.assign(bedges.size(), 0);
  p.base_edge_of.assign(edges.size(), -1);
  p.copy_of.assign(edges.size(), -1);
  for (int e = 0; e < (int)edges.size(); ++e) {
    Flag fa = edges[e].a;
    int r = run_of[fa];
    int be = beo[base_flag_of_run[r]];
    p.base_edge_of[e] = be;
    int idx = (int)(std::find(runs[r].begin(), runs[r].end(), fa) -
                    runs[r].begin());
    p.copy_of[e] = idx;
  }
  for (int e = 0; e < (int)edges.size(); ++e) p.mult[p.base_edge_of[e]]++;
  for (int be = 0; be < (int)bedges.size(); ++be)
    if (p.mult[be] < 1) throw StructuralError("empty parallel class");
  return p;
}

ArcGraph expand_edges(const ArcGraph& g0, const std::vector<int>& mult,
                      int new_angle_mark) {
  ArcGraph g = canonicalize(g0);
  FlagIndex ix = index_flags(g);
  auto edges = edge_list(g);
  auto eo = edge_of_flag(g, edges);
  if (mult.size() != edges.size())
    throw std::invalid_argument("expand_edges: multiplicity size mismatch");
  for (int m : mult)
    if (m < 1) throw std::invalid_argument("expand_edges: multiplicity < 1");

  // lay out copies: ascending copy order at the edge's first flag, reversed
  // at the second
  ArcGraph h;
  h.genus = g.genus;
  h.io = g.io;
  h.bnd.resize(g.n_boundaries());
  std::vector<std::vector<Flag>> copies_at(g.n_flags()); // per old flag
  int next = 0;
  for (int b = 0; b < g.n_boundaries(); ++b) {
    for (Flag f : g.bnd[b]) {
      int e = eo[f];
      bool first_end = edges[e].a == f;
      for (int c = 0; c < mult[e]; ++c) copies_at[f].push_back(next++);
      if (!first_end)
        std::reverse(copies_at[f].begin(), copies_at[f].end());
      for (int c = 0; c < mult[e]; ++c) {
        // boundary order: ascending position regardless of copy orientation
      }
      if (!first_end) {
        // positions run in boundary order; copies_at[f][c] is copy c
        std::vector<Flag> pos_order(copies_at[f].rbegin(),
                                    copies_at[f].rend());
        for (Flag nf : pos_order) h.bnd[b].push_back(nf);
      } else {
        for (Flag nf : copies_at[f]) h.bnd[b].push_back(nf);
      }
    }
  }
  h.inv.assign(next, -1);
  for (const auto& e : edges) {
    int m = (int)copies_at[e.a].size();
    for (int c = 0; c < m; ++c) {
      h.inv[copies_at[e.a][c]] = copies_at[e.b][c];
      h.inv[copies_at[e.b][c]] = copies_at[e.a][c];
    }
  }

  // region transport
  OrbitIndex goi = orbit_index(g);
  auto new_orbs = region_walk(h);
  std::vector<int> new_orbit_of(h.n_flags(), -1);
  for (int i = 0; i < (int)new_orbs.size(); ++i)
    for (Flag f : new_orbs[i]) new_orbit_of[f] = i;
  FlagIndex hix = index_flags(h);

  // new squares: orbits between consecutive copies of one old edge
  std::vector<int> old_flag(h.n_flags(), -1), copy_ix(h.n_flags(), -1);
  for (int f = 0; f < g.n_flags(); ++f)
    for (int c = 0; c < (int)copies_at[f].size(); ++c) {
      old_flag[copies_at[f][c]] = f;
      copy_ix[copies_at[f][c]] = c;
    }
  std::vector<int> orbit_region(new_orbs.size(), -2); // -1 = new square
  auto inner = [&](Flag f) {
    return hix.pos[f] + 1 < (int)h.bnd[hix.boundary[f]].size();
  };
  for (int i = 0; i < (int)new_orbs.size(); ++i) {
    const auto& o = new_orbs[i];
    // a square between two consecutive copies of one old edge: both angle
    // sides inner (outside angles never separate parallel copies)
    if (o.size() == 2 && eo[old_flag[o[0]]] == eo[old_flag[o[1]]] &&
        o[1] != h.inv[o[0]] && inner(h.inv[o[0]]) && inner(h.inv[o[1]]))
      orbit_region[i] = -1;
  }
  // map old angles to new angles: last copy position of old flag x, then the
  // next flag in the new boundary order
  for (int x = 0; x < g.n_flags(); ++x) {
    bool first_end = edges[eo[x]].a == x;
    Flag x_end = first_end ? copies_at[x].back() : copies_at[x].front();
    Flag y_new = succ_flag(h, hix, x_end);
    int old_region = goi.region_of_orbit[goi.orbit_of[succ_flag(g, ix, x)]];
    int no = new_orbit_of[y_new];
    if (orbit_region[no] == -1) throw StructuralError("old angle in new square");
    if (orbit_region[no] != -2 && orbit_region[no] != old_region)
      throw StructuralError("inconsistent region expansion");
    orbit_region[no] = old_region;
  }
  h.regions.clear();
  for (int r = 0; r < (int)g.regions.size(); ++r) {
    Region nr;
    nr.genus = g.regions[r].genus;
    nr.isolated = g.regions[r].isolated;
    for (int i = 0; i < (int)new_orbs.size(); ++i)
      if (orbit_region[i] == r) nr.cycles.push_back(new_orbs[i]);
    if (nr.cycles.empty() && nr.isolated.empty())
      throw StructuralError("region lost in expansion");
    h.regions.push_back(nr);
  }
  for (int i = 0; i < (int)new_orbs.size(); ++i) {
    if (orbit_region[i] != -1) continue;
    Region nr;
    nr.cycles.push_back(new_orbs[i]);
    h.regions.push_back(nr);
  }

  if (g.angle_marks) {
    std::vector<int> am(h.n_flags(), new_angle_mark);
    for (int x = 0; x < g.n_flags(); ++x) {
      bool first_end = edges[eo[x]].a == x;
      Flag x_end = first_end ? copies_at[x].back() : copies_at[x].front();
      am[x_end] = (*g.angle_marks)[x];
    }
    h.angle_marks = am;
  }
  return canonicalize(h);
}

std::vector<char> partitioning_angles(const PartitionedArcGraph& p) {
  const ArcGraph& g = p.g;
  FlagIndex ix = index_flags(g);
  OrbitIndex oi = orbit_index(g);
  std::vector<char> square(oi.orbits.size(), 0);
  for (int i = 0; i < (int)oi.orbits.size(); ++i)
    square[i] = parallel_square(g, ix, oi, i);
  std::vector<char> out(g.n_flags(), 0);
  for (Flag x = 0; x < g.n_flags(); ++x)
    out[x] = square[oi.orbit_of[g.inv[x]]];
  return out;
}

bool is_twisted_partitioned(const PartitionedArcGraph& p, int boundary) {
  if (!is_twisted_at(p.base, boundary)) return false;
  if (p.g.bnd[boundary].empty()) return false;
  auto edges = edge_list(p.g);
  auto eo = edge_of_flag(p.g, edges);
  Flag first = p.g.bnd[boundary].front(), last = p.g.bnd[boundary].back();
  return p.mult[p.base_edge_of[eo[first]]] >= 2 &&
         p.mult[p.base_edge_of[eo[last]]] >= 2;
}

ArcGraph standard_marking(const ArcGraph& g) {
  ArcGraph h = canonicalize(g);
  FlagIndex ix = index_flags(h);
  std::vector<int> am(h.n_flags(), 1);
  if (h.io) {
    for (Flag f = 0; f < h.n_flags(); ++f) {
      int b = ix.boundary[f];
      bool outside = ix.pos[f] + 1 == (int)h.bnd[b].size();
      if (!outside && (*h.io)[b] == IOMark::out) am[f] = 0;
    }
  }
  h.angle_marks = am;
  return h;
}

static void all_mults(int k, int weight_cap,
                      const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> m(k, 1);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k) {
      fn(m);
      return;
    }
    for (int v = 1; v + (k - 1 - i) <= left; ++v) {
      m[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (k <= weight_cap) rec(0, weight_cap);
}

int expansion_sign_io(const ArcGraph& base, const std::vector<int>& mult) {
  if (!base.io) throw std::invalid_argument("expansion_sign_io needs io marks");
  ArcGraph b = canonicalize(base);
  auto edges = edge_list(b);
  auto eo = edge_of_flag(b, edges);
  // walk the expanded inner angles of each in-boundary: new partitioning
  // lines sit between copies, old lines between runs; the sign counts the
  // news that jump before each old line
  int inversions = 0, news_so_far = 0;
  for (int bd = 0; bd < b.n_boundaries(); ++bd) {
    if ((*b.io)[bd] != IOMark::in) continue;
    const auto& flags = b.bnd[bd];
    for (int s = 0; s < (int)flags.size(); ++s) {
      news_so_far += mult[eo[flags[s]]] - 1;
      if (s + 1 < (int)flags.size()) inversions += news_so_far;
    }
  }
  return inversions % 2 ? -1 : 1;
}

FormalSum<ArcGraph> expand_sum(const ArcGraph& base, int weight_cap) {
  FormalSum<ArcGraph> out;
  ArcGraph b = canonicalize(base);
  b.angle_marks.reset();
  int k = b.n_arcs();
  all_mults(k, weight_cap, [&](const std::vector<int>& m) {
    ArcGraph t = expand_edges(b, m);
    out.add(canonical_key(t), t, Rat(expansion_sign(m)));
  });
  return out;
}

FormalSum<ArcGraph> expand_angle_sum(const ArcGraph& base, int weight_cap) {
  ArcGraph b = base;
  if (!b.angle_marks) b = standard_marking(b);
  b = canonicalize(b);
  FormalSum<ArcGraph> out;
  int k = b.n_arcs();
  all_mults(k, weight_cap, [&](const std::vector<int>& m) {
    ArcGraph t = expand_edges(b, m, 1);
    int sign = b.io ? expansion_sign_io(b, m) : expansion_sign(m);
    out.add(canonical_key(t), t, Rat(sign));
  });
  return out;
}

FormalSum<MarkedRibbonGraph> expand_ribbon_sum(const MarkedRibbonGraph& base,
                                               int weight_cap) {
  FormalSum<MarkedRibbonGraph> out;
  int k = base.n_edges();
  all_mults(k, weight_cap, [&](const std::vector<int>& m) {
    // insert m[e]-1 vertices into edge e; edges ordered by their smaller
    // flag under the cycle enumeration used by ribbon_key
    MarkedRibbonGraph t = base;
    // edge order of the ribbon graph: by minimal flag in cycle order
    // (cycles enumerated from their marks)
    std::vector<int> order(base.n_flags(), -1);
    {
      auto vo = [&](Flag) { return 0; };
      (void)vo;
      int next = 0;
      for (Flag mk : base.cycle_marks) {
        // walk the cycle
        Flag f = mk;
        do {
          if (order[f] == -1) order[f] = next++;
          // next flag in cycle
          const auto& g = base;
          // find vertex of inv(f)
          Flag h = g.inv[f];
          int v = -1, p = -1;
          for (int vv = 0; vv < g.n_vertices(); ++vv) {
            auto it = std::find(g.vertices[vv].begin(), g.vertices[vv].end(), h);
            if (it != g.vertices[vv].end()) {
              v = vv;
              p = (int)(it - g.vertices[vv].begin());
            }
          }
          f = base.vertices[v][(p + 1) % base.vertices[v].size()];
        } while (f != mk);
      }
    }
    std::vector<std::pair<int, int>> edge_rank; // (rank, edge index)
    {
      std::vector<std::pair<Flag, Flag>> edges;
      for (int f = 0; f < base.n_flags(); ++f)
        if (f < base.inv[f]) edges.push_back({f, base.inv[f]});
      for (int e = 0; e < (int)edges.size(); ++e)
        edge_rank.push_back(
            {std::min(order[edges[e].first], order[edges[e].second]), e});
      std::sort(edge_rank.begin(), edge_rank.end());
    }
    // insert vertices, processing edges in rank order; edge indices in the
    // growing graph are tracked by flag pairs
    std::vector<std::pair<Flag, Flag>> cur_edges;
    for (int f = 0; f < t.n_flags(); ++f)
      if (f < t.inv[f]) cur_edges.push_back({f, t.inv[f]});
    for (int r = 0; r < (int)edge_rank.size(); ++r) {
      int e = edge_rank[r].second;
      Flag fa = cur_edges[e].first;
      for (int c = 1; c < m[r]; ++c) {
        // find the current index of the edge containing fa
        std::vector<std::pair<Flag, Flag>> es;
        for (int f = 0; f < t.n_flags(); ++f)
          if (f < t.inv[f]) es.push_back({f, t.inv[f]});
        int idx = -1;
        for (int i = 0; i < (int)es.size(); ++i)
          if (es[i].first == fa || es[i].second == fa) idx = i;
        t = insert_vertex(t, idx);
        if (t.angle_marks) {
          (*t.angle_marks)[t.n_flags() - 1] = 1;
          (*t.angle_marks)[t.n_flags() - 2] = 1;
        }
      }
    }
    t.partitioned_role = true;
    // sign: same shuffle convention, edge lines in rank order
    std::vector<int> parts(m.size());
    for (int r = 0; r < (int)edge_rank.size(); ++r) parts[r] = m[r];
    out.add(ribbon_key(t), t, Rat(expansion_sign(parts)));
  });
  return out;
}

} // namespace arcops
