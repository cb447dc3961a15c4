#include "arcops/differential.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arcops {

ArcGraph remove_arcs(const ArcGraph& g, const std::vector<int>& edge_indices) {
  auto edges = edge_list(g);
  std::vector<char> removed(edges.size(), 0);
  for (int e : edge_indices) {
    if (e < 0 || e >= (int)edges.size())
      throw std::domain_error("remove_arcs: no such edge");
    removed[e] = 1;
  }
  int kept_edges = 0;
  for (char r : removed)
    if (!r) ++kept_edges;
  if (kept_edges == 0) throw std::domain_error("remove_arcs: nothing left");

  auto orbs = region_walk(g);
  std::vector<int> orbit_of(g.n_flags(), -1);
  for (int i = 0; i < (int)orbs.size(); ++i)
    for (Flag f : orbs[i]) orbit_of[f] = i;
  std::vector<int> region_of_orbit(orbs.size(), -1);
  for (int r = 0; r < (int)g.regions.size(); ++r)
    for (const auto& c : g.regions[r].cycles) {
      auto cc = c;
      auto it = std::min_element(cc.begin(), cc.end());
      std::rotate(cc.begin(), it, cc.end());
      for (int i = 0; i < (int)orbs.size(); ++i)
        if (orbs[i] == cc) region_of_orbit[i] = r;
    }
  for (int r : region_of_orbit)
    if (r < 0) throw StructuralError("remove_arcs: regions do not match orbits");

  int R = (int)g.regions.size();
  std::vector<int> uf(R);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<int> chi_deficit(R, 0);
  auto region_of_flag = [&](Flag f) { return region_of_orbit[orbit_of[f]]; };
  for (int e = 0; e < (int)edges.size(); ++e) {
    if (!removed[e]) continue;
    int ra = find(region_of_flag(edges[e].a));
    int rb = find(region_of_flag(edges[e].b));
    uf[ra] = rb;
    chi_deficit[find(rb)] += 0; // counted per removed arc below
  }

  // build the reduced graph
  ArcGraph h;
  h.io = g.io;
  std::vector<char> drop_flag(g.n_flags(), 0);
  for (int e = 0; e < (int)edges.size(); ++e)
    if (removed[e]) drop_flag[edges[e].a] = drop_flag[edges[e].b] = 1;
  std::vector<int> rename(g.n_flags(), -1);
  int next = 0;
  h.bnd.resize(g.n_boundaries());
  for (int b = 0; b < g.n_boundaries(); ++b)
    for (Flag f : g.bnd[b]) {
      if (drop_flag[f]) continue;
      rename[f] = next++;
      h.bnd[b].push_back(rename[f]);
    }
  h.inv.assign(next, -1);
  for (int f = 0; f < g.n_flags(); ++f)
    if (rename[f] != -1) h.inv[rename[f]] = rename[g.inv[f]];
  if (g.angle_marks) {
    std::vector<int> am(next, 0);
    for (int f = 0; f < g.n_flags(); ++f)
      if (rename[f] != -1) am[rename[f]] = (*g.angle_marks)[f];
    h.angle_marks = am;
  }

  // group data
  std::vector<int> group_chi(R, 0);
  for (int r = 0; r < R; ++r) group_chi[find(r)] += region_chi(g.regions[r]);
  int n_removed = 0;
  for (int e = 0; e < (int)edges.size(); ++e)
    if (removed[e]) {
      group_chi[find(region_of_flag(edges[e].a))] -= 1;
      ++n_removed;
    }
  auto new_orbs = region_walk(h);
  std::vector<int> old_flag(next);
  for (int f = 0; f < g.n_flags(); ++f)
    if (rename[f] != -1) old_flag[rename[f]] = f;
  std::map<int, Region> group_region;
  for (const auto& o : new_orbs)
    group_region[find(region_of_flag(old_flag[o[0]]))].cycles.push_back(o);
  for (int r = 0; r < R; ++r)
    for (int b : g.regions[r].isolated)
      group_region[find(r)].isolated.push_back(b);
  for (int b = 0; b < g.n_boundaries(); ++b)
    if (!g.bnd[b].empty() && h.bnd[b].empty())
      group_region[find(region_of_flag(g.bnd[b][0]))].isolated.push_back(b);
  for (auto& [grp, reg] : group_region) {
    int cycles = (int)(reg.cycles.size() + reg.isolated.size());
    int twoGen = 2 - group_chi[grp] - cycles;
    if (twoGen < 0 || twoGen % 2)
      throw StructuralError("remove_arcs: genus bookkeeping failed");
    reg.genus = twoGen / 2;
    h.regions.push_back(reg);
  }
  h.genus = g.genus;
  return canonicalize(h);
}

ArcGraph remove_arc(const ArcGraph& g, int edge_index) {
  auto edges = edge_list(g);
  if (edge_index < 0 || edge_index >= (int)edges.size())
    throw std::domain_error("remove_arc: no such edge");
  Flag fa = edges[edge_index].a, fb = edges[edge_index].b;

  // locate the two sides and their regions
  auto orbs = region_walk(g);
  std::map<Flag, int> orbit_of;
  for (int i = 0; i < (int)orbs.size(); ++i)
    for (Flag f : orbs[i]) orbit_of[f] = i;
  std::vector<int> region_of_orbit(orbs.size(), -1);
  for (int r = 0; r < (int)g.regions.size(); ++r)
    for (const auto& c : g.regions[r].cycles) {
      auto cc = c;
      auto it = std::min_element(cc.begin(), cc.end());
      std::rotate(cc.begin(), it, cc.end());
      for (int i = 0; i < (int)orbs.size(); ++i)
        if (orbs[i] == cc) region_of_orbit[i] = r;
    }
  int o1 = orbit_of[fa], o2 = orbit_of[fb];
  int r1 = region_of_orbit[o1], r2 = region_of_orbit[o2];
  if (r1 < 0 || r2 < 0) throw StructuralError("regions do not match orbits");

  // build the reduced graph
  ArcGraph h;
  h.io = g.io;
  std::vector<int> rename(g.n_flags(), -1);
  int next = 0;
  FlagIndex ix = index_flags(g);
  h.bnd.resize(g.n_boundaries());
  for (int b = 0; b < g.n_boundaries(); ++b)
    for (Flag f : g.bnd[b]) {
      if (f == fa || f == fb) continue;
      rename[f] = next++;
      h.bnd[b].push_back(rename[f]);
    }
  h.inv.assign(next, -1);
  for (int f = 0; f < g.n_flags(); ++f)
    if (rename[f] != -1) h.inv[rename[f]] = rename[g.inv[f]];
  for (Flag f : h.inv)
    if (f == -1) throw StructuralError("remove_arc: broken involution");

  // new region bookkeeping
  int merged_genus;
  if (r1 != r2)
    merged_genus = g.regions[r1].genus + g.regions[r2].genus;
  else if (o1 == o2)
    merged_genus = g.regions[r1].genus; // one cycle splits
  else
    merged_genus = g.regions[r1].genus + 1; // two cycles merge

  auto new_orbs = region_walk(h);
  // map each new orbit to its old region via any member flag
  std::vector<int> old_flag(next);
  for (int f = 0; f < g.n_flags(); ++f)
    if (rename[f] != -1) old_flag[rename[f]] = f;

  // regions: all old ones except r1,r2 plus the merged region
  std::map<int, int> region_map; // old region -> new index
  int nr = 0;
  for (int r = 0; r < (int)g.regions.size(); ++r) {
    if (r == r1 || r == r2) continue;
    region_map[r] = nr++;
  }
  int merged_index = nr++;
  region_map[r1] = merged_index;
  region_map[r2] = merged_index;
  h.regions.resize(nr);
  for (int r = 0; r < (int)g.regions.size(); ++r) {
    if (r == r1 || r == r2) continue;
    h.regions[region_map[r]].genus = g.regions[r].genus;
  }
  h.regions[merged_index].genus = merged_genus;
  for (const auto& o : new_orbs) {
    int oldr = region_of_orbit[orbit_of[old_flag[o[0]]]];
    h.regions[region_map[oldr]].cycles.push_back(o);
  }
  // carried and newly created isolated boundaries
  for (int r = 0; r < (int)g.regions.size(); ++r)
    for (int b : g.regions[r].isolated)
      h.regions[region_map[r]].isolated.push_back(b);
  for (int b = 0; b < g.n_boundaries(); ++b)
    if (!g.bnd[b].empty() && h.bnd[b].empty())
      h.regions[merged_index].isolated.push_back(b);
  (void)ix;

  int chi_sum = 0;
  for (const auto& r : h.regions) chi_sum += region_chi(r);
  int twoG = 2 - h.n_boundaries() - (chi_sum - h.n_arcs());
  if (twoG % 2) throw StructuralError("remove_arc: genus parity");
  h.genus = twoG / 2;
  if (h.genus != g.genus) throw StructuralError("remove_arc: genus changed");
  return canonicalize(h);
}

ArcGraph one_arc_subgraph(const ArcGraph& g, int edge_index) {
  std::vector<int> others;
  for (int e = 0; e < g.n_arcs(); ++e)
    if (e != edge_index) others.push_back(e);
  return others.empty() ? canonicalize(g) : remove_arcs(g, others);
}

ArcGraph two_arc_subgraph(const ArcGraph& g, int e1, int e2) {
  std::vector<int> others;
  for (int e = 0; e < g.n_arcs(); ++e)
    if (e != e1 && e != e2) others.push_back(e);
  return others.empty() ? canonicalize(g) : remove_arcs(g, others);
}

FormalSum<ArcGraph> differential(const ArcGraph& g, Family family) {
  FormalSum<ArcGraph> out;
  int E = g.n_arcs();
  if (E <= 1) return out; // removal would leave no arc
  int sign = 1;
  for (int j = 0; j < E; ++j, sign = -sign) {
    ArcGraph h = remove_arc(g, j);
    if (!in_family(h, family)) continue;
    out.add(canonical_key(h), h, Rat(sign));
  }
  return out;
}

FormalSum<ArcGraph> differential(const FormalSum<ArcGraph>& s, Family family) {
  FormalSum<ArcGraph> out;
  for (const auto& [k, t] : s.terms) {
    auto d = differential(t.value, family);
    d *= t.coeff;
    out += d;
  }
  return out;
}

} // namespace arcops
