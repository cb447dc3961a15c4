#include "arcops/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "arcops/differential.hpp"
#include "json.hpp"

namespace arcops {

FlagIndex index_flags(const ArcGraph& g) {
  const int F = g.n_flags();
  FlagIndex ix;
  ix.boundary.assign(F, -1);
  ix.pos.assign(F, -1);
  for (int b = 0; b < g.n_boundaries(); ++b) {
    for (int p = 0; p < (int)g.bnd[b].size(); ++p) {
      Flag f = g.bnd[b][p];
      if (f < 0 || f >= F) throw StructuralError("flag id out of range");
      if (ix.boundary[f] != -1) throw StructuralError("flag listed twice");
      ix.boundary[f] = b;
      ix.pos[f] = p;
    }
  }
  for (int f = 0; f < F; ++f)
    if (ix.boundary[f] == -1) throw StructuralError("dangling flag");
  return ix;
}

Flag succ_flag(const ArcGraph& g, const FlagIndex& ix, Flag f) {
  const auto& v = g.bnd[ix.boundary[f]];
  return v[(ix.pos[f] + 1) % v.size()];
}

Flag pred_flag(const ArcGraph& g, const FlagIndex& ix, Flag f) {
  const auto& v = g.bnd[ix.boundary[f]];
  return v[(ix.pos[f] + v.size() - 1) % v.size()];
}

static void check_involution(const std::vector<Flag>& inv) {
  const int F = (int)inv.size();
  if (F % 2) throw StructuralError("odd number of flags");
  for (int f = 0; f < F; ++f) {
    if (inv[f] < 0 || inv[f] >= F) throw StructuralError("involution out of range");
    if (inv[f] == f) throw StructuralError("involution has a fixed point");
    if (inv[inv[f]] != f) throw StructuralError("not an involution");
  }
}

static std::vector<std::vector<Flag>> orbits_of(
    int F, const std::function<Flag(Flag)>& next) {
  std::vector<char> seen(F, 0);
  std::vector<std::vector<Flag>> out;
  for (int f = 0; f < F; ++f) {
    if (seen[f]) continue;
    std::vector<Flag> orb;
    Flag x = f;
    while (!seen[x]) {
      seen[x] = 1;
      orb.push_back(x);
      x = next(x);
    }
    // rotate to minimal flag
    auto it = std::min_element(orb.begin(), orb.end());
    std::rotate(orb.begin(), it, orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Flag>> region_walk(const ArcGraph& g) {
  check_involution(g.inv);
  FlagIndex ix = index_flags(g);
  return orbits_of(g.n_flags(),
                   [&](Flag f) { return succ_flag(g, ix, g.inv[f]); });
}

std::vector<Edge> edge_list(const ArcGraph& g) {
  FlagIndex ix = index_flags(g);
  auto ord = [&](Flag f) {
    return std::pair<int, int>(ix.boundary[f], ix.pos[f]);
  };
  std::vector<Edge> edges;
  for (int f = 0; f < g.n_flags(); ++f)
    if (ord(f) < ord(g.inv[f])) edges.push_back({f, g.inv[f]});
  std::sort(edges.begin(), edges.end(),
            [&](const Edge& a, const Edge& b) { return ord(a.a) < ord(b.a); });
  return edges;
}

std::vector<int> edge_of_flag(const ArcGraph& g,
                              const std::vector<Edge>& edges) {
  std::vector<int> eo(g.n_flags(), -1);
  for (int e = 0; e < (int)edges.size(); ++e)
    eo[edges[e].a] = eo[edges[e].b] = e;
  return eo;
}

int region_chi(const Region& r) {
  return 2 - 2 * r.genus - (int)(r.cycles.size() + r.isolated.size());
}

static std::vector<Flag> canonical_cycle(std::vector<Flag> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

// region index containing each flag's orbit; -1 if the orbit is unassigned
static std::vector<int> region_of_flag(const ArcGraph& g) {
  std::vector<int> ro(g.n_flags(), -1);
  for (int r = 0; r < (int)g.regions.size(); ++r)
    for (const auto& c : g.regions[r].cycles)
      for (Flag f : c) ro[f] = r;
  return ro;
}

static bool is_inner_angle(const ArcGraph& g, const FlagIndex& ix, Flag f) {
  return ix.pos[f] + 1 < (int)g.bnd[ix.boundary[f]].size();
}

// A disk region whose single cycle is [ArcSide(x), Angle, ArcSide(y), Angle]
// with both angles inner and x,y on distinct arcs witnesses a parallel pair.
static bool is_parallel_square(const ArcGraph& g, const FlagIndex& ix,
                               const Region& r) {
  if (r.genus != 0 || r.cycles.size() != 1 || !r.isolated.empty()) return false;
  const auto& c = r.cycles[0];
  if (c.size() != 2) return false;
  Flag x = c[0], y = c[1];
  if (g.inv[x] == y) return false; // same arc
  return is_inner_angle(g, ix, g.inv[x]) && is_inner_angle(g, ix, g.inv[y]);
}

ValidationReport validate(const ArcGraph& g, GraphRole role) {
  ValidationReport rep;
  check_involution(g.inv);
  FlagIndex ix = index_flags(g);

  if (g.n_arcs() < 1) rep.fail("at least one arc required");
  if (g.genus < 0) rep.fail("negative surface genus");

  // regions: derived orbits must equal the stored cycles as a set
  auto orbs = region_walk(g);
  std::map<std::vector<Flag>, int> orb_region;
  for (const auto& o : orbs) orb_region[o] = -1;
  bool cycles_ok = true;
  for (int r = 0; r < (int)g.regions.size(); ++r) {
    if (g.regions[r].genus < 0) rep.fail("negative region genus");
    for (const auto& c : g.regions[r].cycles) {
      auto cc = canonical_cycle(c);
      auto it = orb_region.find(cc);
      if (it == orb_region.end() || it->second != -1) {
        cycles_ok = false;
      } else {
        it->second = r;
      }
    }
  }
  for (auto& [o, r] : orb_region)
    if (r == -1) cycles_ok = false;
  if (!cycles_ok) rep.fail("region cycles are not the walk orbits");

  // flagless boundaries sit in exactly one region; others in none
  std::vector<int> iso_count(g.n_boundaries(), 0);
  for (const auto& r : g.regions)
    for (int b : r.isolated) {
      if (b < 0 || b >= g.n_boundaries()) throw StructuralError("isolated label out of range");
      iso_count[b]++;
    }
  for (int b = 0; b < g.n_boundaries(); ++b) {
    if (g.bnd[b].empty() && iso_count[b] != 1)
      rep.fail("flagless boundary not placed in exactly one region");
    if (!g.bnd[b].empty() && iso_count[b] != 0)
      rep.fail("boundary with flags listed as isolated");
  }

  // Euler identity
  int chi_sum = 0;
  for (const auto& r : g.regions) chi_sum += region_chi(r);
  if (chi_sum - g.n_arcs() != 2 - 2 * g.genus - g.n_boundaries())
    rep.fail("Euler identity violated");

  // connectivity of the glued surface
  if (cycles_ok && !g.regions.empty()) {
    int R = (int)g.regions.size(), B = g.n_boundaries();
    std::vector<int> uf(R + B);
    for (int i = 0; i < R + B; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    auto ro = region_of_flag(g);
    for (int f = 0; f < g.n_flags(); ++f) {
      unite(ro[f], R + ix.boundary[f]);          // region touches boundary
      unite(ro[f], ro[g.inv[f]]);                // regions share an arc
    }
    for (int r = 0; r < R; ++r)
      for (int b : g.regions[r].isolated) unite(r, R + b);
    int root = find(0);
    bool conn = true;
    for (int i = 0; i < R + B; ++i)
      if (find(i) != root) conn = false;
    if (!conn) rep.fail("surface is disconnected");
  }

  if (role == GraphRole::strict && cycles_ok) {
    for (const auto& r : g.regions) {
      if (is_parallel_square(g, ix, r))
        rep.fail("parallel arcs (square region between distinct arcs)");
    }
    // an arc is parallel to a boundary when its own one-arc subgraph (other
    // arcs ignored, as in the isotopy) has a one-arc-side cycle bounding a
    // disk, possibly around one flagless boundary
    auto edges = edge_list(g);
    for (int e = 0; e < (int)edges.size() && rep.ok; ++e) {
      std::vector<int> others;
      for (int e2 = 0; e2 < (int)edges.size(); ++e2)
        if (e2 != e) others.push_back(e2);
      ArcGraph sub = one_arc_subgraph(g, e);
      for (const auto& r : sub.regions)
        for (const auto& c : r.cycles)
          if (c.size() == 1 && r.genus == 0 && r.cycles.size() == 1 &&
              r.isolated.size() <= 1)
            rep.fail("arc parallel to a boundary");
    }
  }

  if (g.angle_marks) {
    if ((int)g.angle_marks->size() != g.n_flags())
      throw StructuralError("angle mark table size mismatch");
    for (int m : *g.angle_marks)
      if (m != 0 && m != 1) rep.fail("angle mark not in {0,1}");
  }
  if (g.io && (int)g.io->size() != g.n_boundaries())
    throw StructuralError("io mark table size mismatch");
  return rep;
}

static bool twisted_core(const ArcGraph& g, int boundary) {
  if (g.bnd[boundary].empty()) return false;
  Flag first = g.bnd[boundary].front(), last = g.bnd[boundary].back();
  if (g.inv[first] == last || first == last) return false; // same arc
  // cycle containing the outside angle at this boundary
  auto orbs = region_walk(g);
  auto ro = region_of_flag(g);
  for (const auto& o : orbs) {
    if (std::find(o.begin(), o.end(), first) == o.end()) continue;
    if (o.size() != 2) return false;
    // the two arc sides are first and inv(last) by the orbit structure
    const Region& r = g.regions[ro[first]];
    return r.genus == 0 && r.cycles.size() == 1 && r.isolated.empty();
  }
  return false;
}

bool is_twisted_at(const ArcGraph& g, int boundary) {
  if (g.bnd[boundary].size() < 2) return false;
  Flag first = g.bnd[boundary].front(), last = g.bnd[boundary].back();
  auto edges = edge_list(g);
  auto eo = edge_of_flag(g, edges);
  // one arc occupying both ends of the boundary wraps the marked point and
  // is parallel to itself after sliding
  if (eo[first] == eo[last]) return true;
  // otherwise the first and last arcs are parallel up to sliding an
  // endpoint around this boundary exactly when their own two-arc subgraph
  // says so
  ArcGraph sub = two_arc_subgraph(g, eo[first], eo[last]);
  return twisted_core(sub, boundary);
}

Classification classify(const ArcGraph& g) {
  Classification c;
  c.exhaustive = true;
  for (const auto& b : g.bnd)
    if (b.empty()) c.exhaustive = false;
  c.quasi_filling = true;
  for (const auto& r : g.regions)
    if (r.genus != 0 || r.cycles.size() != 1 || !r.isolated.empty())
      c.quasi_filling = false;
  for (int b = 0; b < g.n_boundaries(); ++b)
    if (is_twisted_at(g, b)) c.twisted_at.insert(b);
  if (g.io) {
    FlagIndex ix = index_flags(g);
    c.in_out_only = true;
    for (int f = 0; f < g.n_flags(); ++f)
      if ((*g.io)[ix.boundary[f]] == (*g.io)[ix.boundary[g.inv[f]]])
        c.in_out_only = false;
    c.hits_all_in = true;
    int n_out = 0;
    for (int b = 0; b < g.n_boundaries(); ++b) {
      if ((*g.io)[b] == IOMark::in && g.bnd[b].empty()) c.hits_all_in = false;
      if ((*g.io)[b] == IOMark::out) ++n_out;
    }
    c.untwisted_at_in = true;
    for (int b = 0; b < g.n_boundaries(); ++b)
      if ((*g.io)[b] == IOMark::in && c.twisted_at.count(b))
        c.untwisted_at_in = false;
    c.tree_cp = g.genus == 0 && c.quasi_filling && c.in_out_only && n_out == 1;
  }
  return c;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::exhaustive: return "exhaustive";
    case Family::quasi_filling: return "quasi_filling";
    case Family::io: return "io";
    case Family::bar_io: return "bar_io";
    case Family::larc: return "larc";
    case Family::tree_cp: return "tree_cp";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::all, Family::exhaustive, Family::quasi_filling,
                   Family::io, Family::bar_io, Family::larc, Family::tree_cp})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

bool in_family(const ArcGraph& g, Family f) {
  if (!validate(g).ok) return false;
  Classification c = classify(g);
  switch (f) {
    case Family::all: return true;
    case Family::exhaustive: return c.exhaustive;
    case Family::quasi_filling: return c.quasi_filling;
    case Family::io: return g.io && c.in_out_only;
    case Family::bar_io: return g.io && c.in_out_only && c.hits_all_in;
    case Family::larc:
      return g.io && c.in_out_only && c.hits_all_in && c.untwisted_at_in;
    case Family::tree_cp: return g.io && c.tree_cp;
  }
  return false;
}

ArcGraph canonicalize(const ArcGraph& g) {
  FlagIndex ix = index_flags(g);
  std::vector<int> rename(g.n_flags(), -1);
  int next = 0;
  for (const auto& b : g.bnd)
    for (Flag f : b) rename[f] = next++;
  ArcGraph out;
  out.genus = g.genus;
  out.bnd.resize(g.n_boundaries());
  for (int b = 0; b < g.n_boundaries(); ++b)
    for (Flag f : g.bnd[b]) out.bnd[b].push_back(rename[f]);
  out.inv.assign(g.n_flags(), -1);
  for (int f = 0; f < g.n_flags(); ++f) out.inv[rename[f]] = rename[g.inv[f]];
  for (const auto& r : g.regions) {
    Region nr;
    nr.genus = r.genus;
    nr.isolated = r.isolated;
    std::sort(nr.isolated.begin(), nr.isolated.end());
    for (const auto& c : r.cycles) {
      std::vector<Flag> nc;
      for (Flag f : c) nc.push_back(rename[f]);
      nr.cycles.push_back(canonical_cycle(nc));
    }
    std::sort(nr.cycles.begin(), nr.cycles.end());
    out.regions.push_back(std::move(nr));
  }
  std::sort(out.regions.begin(), out.regions.end(),
            [](const Region& a, const Region& b) {
              auto ka = a.cycles.empty() ? std::vector<Flag>{-1} : a.cycles[0];
              auto kb = b.cycles.empty() ? std::vector<Flag>{-1} : b.cycles[0];
              if (ka != kb) return ka < kb;
              return a.isolated < b.isolated;
            });
  if (g.angle_marks) {
    std::vector<int> am(g.n_flags());
    for (int f = 0; f < g.n_flags(); ++f) am[rename[f]] = (*g.angle_marks)[f];
    out.angle_marks = am;
  }
  out.io = g.io;
  return out;
}

std::string canonical_key(const ArcGraph& g) {
  ArcGraph c = canonicalize(g);
  std::ostringstream os;
  os << "g" << c.genus << ";B";
  for (const auto& b : c.bnd) os << b.size() << ",";
  os << ";I";
  for (Flag f : c.inv) os << f << ",";
  os << ";R";
  for (const auto& r : c.regions) {
    os << "(" << r.genus << ":";
    for (const auto& cy : r.cycles) {
      for (Flag f : cy) os << f << ".";
      os << "|";
    }
    os << "i";
    for (int b : r.isolated) os << b << ".";
    os << ")";
  }
  if (c.angle_marks) {
    os << ";M";
    for (int m : *c.angle_marks) os << m;
  }
  if (c.io) {
    os << ";O";
    for (IOMark m : *c.io) os << (m == IOMark::in ? 'i' : 'o');
  }
  return os.str();
}

ArcGraph relabel_boundaries(const ArcGraph& g, const std::vector<int>& perm) {
  ArcGraph out = g;
  for (int b = 0; b < g.n_boundaries(); ++b) out.bnd[perm[b]] = g.bnd[b];
  for (auto& r : out.regions)
    for (int& b : r.isolated) b = perm[b];
  if (g.io)
    for (int b = 0; b < g.n_boundaries(); ++b)
      (*out.io)[perm[b]] = (*g.io)[b];
  return out;
}

// ---- marked ribbon graphs -------------------------------------------------

static std::vector<int> ribbon_vertex_of(const MarkedRibbonGraph& g) {
  std::vector<int> vo(g.n_flags(), -1);
  for (int v = 0; v < g.n_vertices(); ++v)
    for (Flag f : g.vertices[v]) {
      if (f < 0 || f >= g.n_flags()) throw StructuralError("ribbon flag out of range");
      if (vo[f] != -1) throw StructuralError("ribbon flag listed twice");
      vo[f] = v;
    }
  for (int f = 0; f < g.n_flags(); ++f)
    if (vo[f] == -1) throw StructuralError("dangling ribbon flag");
  return vo;
}

static Flag ribbon_next(const MarkedRibbonGraph& g, const std::vector<int>& vo,
                        Flag f) {
  const auto& v = g.vertices[vo[f]];
  int p = (int)(std::find(v.begin(), v.end(), f) - v.begin());
  return v[(p + 1) % v.size()];
}

std::vector<std::vector<Flag>> ribbon_cycles(const MarkedRibbonGraph& g) {
  check_involution(g.inv);
  auto vo = ribbon_vertex_of(g);
  return orbits_of(g.n_flags(),
                   [&](Flag f) { return ribbon_next(g, vo, g.inv[f]); });
}

ValidationReport validate_ribbon(const MarkedRibbonGraph& g) {
  ValidationReport rep;
  check_involution(g.inv);
  auto vo = ribbon_vertex_of(g);
  auto cycles = ribbon_cycles(g);
  if (g.cycle_marks.size() != cycles.size())
    rep.fail("cycle mark count does not match cycle count");
  std::vector<char> marked_vertex(g.n_vertices(), 0);
  for (Flag mk : g.cycle_marks) {
    bool found = false;
    for (const auto& c : cycles)
      if (std::find(c.begin(), c.end(), mk) != c.end()) found = true;
    if (!found || mk < 0 || mk >= g.n_flags())
      rep.fail("cycle mark not a flag of any cycle");
    else
      marked_vertex[vo[mk]] = 1;
  }
  // marks must name distinct cycles
  {
    std::set<int> seen;
    for (Flag mk : g.cycle_marks) {
      for (int c = 0; c < (int)cycles.size(); ++c)
        if (std::find(cycles[c].begin(), cycles[c].end(), mk) != cycles[c].end())
          if (!seen.insert(c).second) rep.fail("two marks on one cycle");
    }
  }
  if (!g.partitioned_role) {
    for (int v = 0; v < g.n_vertices(); ++v)
      if (g.vertices[v].size() == 2 && !marked_vertex[v])
        rep.fail("unmarked valence-2 vertex in marked role");
  }
  if (g.angle_marks && (int)g.angle_marks->size() != g.n_flags())
    throw StructuralError("ribbon angle mark size mismatch");
  return rep;
}

int ribbon_genus(const MarkedRibbonGraph& g) {
  int chi = g.n_vertices() - g.n_edges() + (int)ribbon_cycles(g).size();
  if (chi % 2) throw StructuralError("ribbon graph chi parity");
  return (2 - chi) / 2;
}

std::string ribbon_key(const MarkedRibbonGraph& g) {
  // canonical flag renaming: walk cycles in label order starting at marks
  auto vo = ribbon_vertex_of(g);
  std::vector<int> rename(g.n_flags(), -1);
  int next = 0;
  for (Flag mk : g.cycle_marks) {
    Flag f = mk;
    do {
      if (rename[f] == -1) rename[f] = next++;
      f = ribbon_next(g, vo, g.inv[f]);
    } while (f != mk);
  }
  for (int f = 0; f < g.n_flags(); ++f)
    if (rename[f] == -1) throw StructuralError("flag not on any marked cycle");
  std::ostringstream os;
  os << "V";
  std::vector<std::vector<Flag>> vs;
  for (const auto& v : g.vertices) {
    std::vector<Flag> nv;
    for (Flag f : v) nv.push_back(rename[f]);
    vs.push_back(canonical_cycle(nv));
  }
  std::sort(vs.begin(), vs.end());
  for (const auto& v : vs) {
    for (Flag f : v) os << f << ".";
    os << "|";
  }
  os << ";I";
  std::vector<Flag> ninv(g.n_flags());
  for (int f = 0; f < g.n_flags(); ++f) ninv[rename[f]] = rename[g.inv[f]];
  for (Flag f : ninv) os << f << ",";
  os << ";K";
  for (Flag mk : g.cycle_marks) os << rename[mk] << ",";
  if (g.angle_marks) {
    os << ";M";
    std::vector<int> am(g.n_flags());
    for (int f = 0; f < g.n_flags(); ++f) am[rename[f]] = (*g.angle_marks)[f];
    for (int m : am) os << m;
  }
  os << (g.partitioned_role ? ";p" : ";m");
  return os.str();
}

MarkedRibbonGraph dual_ribbon(const ArcGraph& g) {
  auto rep = validate(g);
  Classification cls = classify(g);
  if (!cls.quasi_filling)
    throw std::domain_error("dual graph only exists for quasi-filling graphs");
  MarkedRibbonGraph out;
  out.inv = g.inv;
  // one vertex per region; cyclic order = arc sides along the region cycle
  ArcGraph cg = g; // region cycles must be the canonical orbits
  for (const auto& r : g.regions) out.vertices.push_back(canonical_cycle(r.cycles[0]));
  for (int b = 0; b < g.n_boundaries(); ++b) {
    if (g.bnd[b].empty())
      throw std::domain_error("dual graph needs an exhaustive graph");
    out.cycle_marks.push_back(g.bnd[b][0]);
  }
  if (g.angle_marks) {
    std::vector<int> am(g.n_flags());
    for (int f = 0; f < g.n_flags(); ++f) am[f] = (*g.angle_marks)[g.inv[f]];
    out.angle_marks = am;
  }
  // role: marked when every valence-2 vertex carries a cycle mark
  out.partitioned_role = false;
  if (!validate_ribbon(out).ok) out.partitioned_role = true;
  if (!validate_ribbon(out).ok)
    throw StructuralError("dual construction produced an invalid ribbon graph");
  return out;
}

ArcGraph arc_from_dual(const MarkedRibbonGraph& g) {
  auto vo = ribbon_vertex_of(g);
  auto cycles = ribbon_cycles(g);
  ArcGraph out;
  out.inv = g.inv;
  out.bnd.resize(g.cycle_marks.size());
  for (int c = 0; c < (int)g.cycle_marks.size(); ++c) {
    Flag mk = g.cycle_marks[c];
    Flag f = mk;
    do {
      out.bnd[c].push_back(f);
      f = ribbon_next(g, vo, g.inv[f]);
    } while (f != mk);
  }
  for (const auto& v : g.vertices) {
    Region r;
    r.genus = 0;
    r.cycles.push_back(canonical_cycle(v));
    out.regions.push_back(std::move(r));
  }
  int chi = (int)g.vertices.size() - g.n_edges();
  int rhs = chi; // sum chi(regions) - edges with disk regions
  int G2 = 2 - (int)out.bnd.size() - rhs;
  if (G2 % 2) throw StructuralError("dual genus parity");
  out.genus = G2 / 2;
  if (g.angle_marks) {
    std::vector<int> am(g.n_flags());
    for (int f = 0; f < g.n_flags(); ++f) am[f] = (*g.angle_marks)[g.inv[f]];
    out.angle_marks = am;
  }
  return canonicalize(out);
}

MarkedRibbonGraph insert_vertex(const MarkedRibbonGraph& g, int edge_index) {
  std::vector<std::pair<Flag, Flag>> edges;
  for (int f = 0; f < g.n_flags(); ++f)
    if (f < g.inv[f]) edges.push_back({f, g.inv[f]});
  if (edge_index < 0 || edge_index >= (int)edges.size())
    throw std::domain_error("insert_vertex: no such edge");
  auto [f1, f2] = edges[edge_index];
  MarkedRibbonGraph out = g;
  Flag n1 = g.n_flags(), n2 = g.n_flags() + 1;
  out.inv.push_back(-1);
  out.inv.push_back(-1);
  out.inv[f1] = n1;
  out.inv[n1] = f1;
  out.inv[f2] = n2;
  out.inv[n2] = f2;
  out.vertices.push_back({n1, n2});
  if (out.angle_marks) {
    out.angle_marks->push_back(0);
    out.angle_marks->push_back(0);
  }
  out.partitioned_role = true;
  return out;
}

MarkedRibbonGraph remove_vertex(const MarkedRibbonGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.n_vertices() ||
      g.vertices[vertex].size() != 2)
    throw std::domain_error("remove_vertex: not a valence-2 vertex");
  Flag n1 = g.vertices[vertex][0], n2 = g.vertices[vertex][1];
  Flag f1 = g.inv[n1], f2 = g.inv[n2];
  if (f1 == n2 || f2 == n1)
    throw std::domain_error("remove_vertex: vertex carries a loop");
  auto vo = ribbon_vertex_of(g);
  MarkedRibbonGraph out;
  std::vector<int> rename(g.n_flags(), -1);
  int next = 0;
  for (int f = 0; f < g.n_flags(); ++f)
    if (f != n1 && f != n2) rename[f] = next++;
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (v == vertex) continue;
    std::vector<Flag> nv;
    for (Flag f : g.vertices[v]) nv.push_back(rename[f]);
    out.vertices.push_back(nv);
  }
  out.inv.assign(next, -1);
  for (int f = 0; f < g.n_flags(); ++f) {
    if (f == n1 || f == n2) continue;
    Flag p = g.inv[f];
    if (p == n1) p = f2;
    if (p == n2) p = f1;
    out.inv[rename[f]] = rename[p];
  }
  for (Flag mk : g.cycle_marks) {
    Flag m = mk;
    if (m == n1) m = f2; // previous flag in the cycle through n1
    if (m == n2) m = f1;
    out.cycle_marks.push_back(rename[m]);
  }
  if (g.angle_marks) {
    std::vector<int> am(next);
    for (int f = 0; f < g.n_flags(); ++f) {
      if (f == n1 || f == n2) continue;
      int m = (*g.angle_marks)[f];
      // the angle after f survives unless its successor was removed; the
      // removed flags' angles disappear with them, successors inherit
      am[rename[f]] = m;
    }
    (void)vo;
    out.angle_marks = am;
  }
  out.partitioned_role = g.partitioned_role;
  return out;
}

// ---- file format -----------------------------------------------------------

using nlohmann::json;

std::string graph_to_json(const ArcGraph& g) {
  FlagIndex ix = index_flags(g);
  auto name = [&](Flag f) {
    if (g.flag_names) return (*g.flag_names)[f];
    return "b" + std::to_string(ix.boundary[f]) + "f" +
           std::to_string(ix.pos[f]);
  };
  json j;
  j["genus"] = g.genus;
  j["boundaries"] = json::array();
  for (int b = 0; b < g.n_boundaries(); ++b) {
    json jb;
    jb["label"] = b;
    jb["flags"] = json::array();
    for (Flag f : g.bnd[b]) jb["flags"].push_back(name(f));
    j["boundaries"].push_back(jb);
  }
  j["arcs"] = json::array();
  for (const auto& e : edge_list(g))
    j["arcs"].push_back(json::array({name(e.a), name(e.b)}));
  j["regions"] = json::array();
  for (const auto& r : g.regions) {
    json jr;
    jr["genus"] = r.genus;
    jr["cycles"] = json::array();
    for (const auto& c : r.cycles) {
      json jc = json::array();
      for (Flag f : c) {
        jc.push_back(json{{"arc", name(f)}});
        jc.push_back(json{{"angle", name(g.inv[f])}});
      }
      jr["cycles"].push_back(jc);
    }
    if (!r.isolated.empty()) jr["isolated"] = r.isolated;
    j["regions"].push_back(jr);
  }
  if (g.angle_marks) {
    json jm;
    for (int f = 0; f < g.n_flags(); ++f) jm[name(f)] = (*g.angle_marks)[f];
    j["angle_marks"] = jm;
  }
  if (g.io) {
    json jo;
    for (int b = 0; b < g.n_boundaries(); ++b)
      jo[std::to_string(b)] = (*g.io)[b] == IOMark::in ? "in" : "out";
    j["io"] = jo;
  }
  return j.dump(2) + "\n";
}

ArcGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw StructuralError(std::string("bad JSON: ") + e.what());
  }
  ArcGraph g;
  std::map<std::string, Flag> ids;
  std::vector<std::string> names;
  auto flag_of = [&](const std::string& s) {
    auto it = ids.find(s);
    if (it == ids.end()) throw StructuralError("unknown flag id: " + s);
    return it->second;
  };
  if (!j.contains("boundaries")) throw StructuralError("missing boundaries");
  std::map<int, std::vector<std::string>> by_label;
  for (const auto& jb : j["boundaries"])
    by_label[jb.at("label").get<int>()] =
        jb.at("flags").get<std::vector<std::string>>();
  int expect = 0;
  for (auto& [label, flags] : by_label) {
    if (label != expect++)
      throw StructuralError("boundary labels must be 0..n");
    g.bnd.emplace_back();
    for (const auto& s : flags) {
      if (ids.count(s)) throw StructuralError("duplicate flag id: " + s);
      ids[s] = (int)names.size();
      names.push_back(s);
      g.bnd.back().push_back(ids[s]);
    }
  }
  g.inv.assign(names.size(), -1);
  for (const auto& ja : j.at("arcs")) {
    Flag a = flag_of(ja.at(0).get<std::string>());
    Flag b = flag_of(ja.at(1).get<std::string>());
    if (g.inv[a] != -1 || g.inv[b] != -1 || a == b)
      throw StructuralError("arc list is not a matching");
    g.inv[a] = b;
    g.inv[b] = a;
  }
  for (Flag f = 0; f < (int)names.size(); ++f)
    if (g.inv[f] == -1) throw StructuralError("flag on no arc");
  g.genus = j.value("genus", 0);
  for (const auto& jr : j.at("regions")) {
    Region r;
    r.genus = jr.at("genus").get<int>();
    for (const auto& jc : jr.at("cycles")) {
      std::vector<Flag> c;
      for (const auto& side : jc)
        if (side.contains("arc")) c.push_back(flag_of(side["arc"]));
      r.cycles.push_back(c);
    }
    if (jr.contains("isolated"))
      r.isolated = jr["isolated"].get<std::vector<int>>();
    g.regions.push_back(std::move(r));
  }
  if (j.contains("angle_marks")) {
    std::vector<int> am(names.size(), 0);
    for (auto& [k, v] : j["angle_marks"].items()) am[flag_of(k)] = v.get<int>();
    g.angle_marks = am;
  }
  if (j.contains("io")) {
    std::vector<IOMark> io(g.n_boundaries(), IOMark::out);
    for (auto& [k, v] : j["io"].items())
      io[std::stoi(k)] = v.get<std::string>() == "in" ? IOMark::in : IOMark::out;
    g.io = io;
  }
  g.flag_names = names;
  return g;
}

} // namespace arcops
