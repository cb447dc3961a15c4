#include "arcops/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "arcops/build.hpp"

namespace arcops {

ArcGraph quasi_filling_graph(const std::vector<std::vector<Flag>>& bnd,
                             const std::vector<Flag>& inv) {
  ArcGraph g;
  g.bnd = bnd;
  g.inv = inv;
  for (const auto& o : region_walk(g)) {
    Region r;
    r.cycles.push_back(o);
    g.regions.push_back(std::move(r));
  }
  int chi_sum = 0;
  for (const auto& r : g.regions) chi_sum += region_chi(r);
  int twoG = 2 - (int)bnd.size() - (chi_sum - g.n_arcs());
  if (twoG % 2 || twoG < 0) throw StructuralError("inconsistent genus");
  g.genus = twoG / 2;
  return canonicalize(g);
}

ArcGraph graph_with_regions(const std::vector<std::vector<Flag>>& bnd,
                            const std::vector<Flag>& inv,
                            const std::vector<int>& orbit_group,
                            const std::vector<int>& block_genus,
                            const std::vector<int>& isolated_in) {
  ArcGraph g;
  g.bnd = bnd;
  g.inv = inv;
  auto orbs = region_walk(g);
  if (orbs.size() != orbit_group.size())
    throw StructuralError("orbit group size mismatch");
  g.regions.resize(block_genus.size());
  for (int i = 0; i < (int)block_genus.size(); ++i)
    g.regions[i].genus = block_genus[i];
  for (int i = 0; i < (int)orbs.size(); ++i)
    g.regions[orbit_group[i]].cycles.push_back(orbs[i]);
  for (int b = 0; b < (int)bnd.size(); ++b)
    if (bnd[b].empty()) g.regions[isolated_in[b]].isolated.push_back(b);
  int chi_sum = 0;
  for (const auto& r : g.regions) chi_sum += region_chi(r);
  int twoG = 2 - (int)bnd.size() - (chi_sum - g.n_arcs());
  if (twoG % 2 || twoG < 0) throw StructuralError("inconsistent genus");
  g.genus = twoG / 2;
  return canonicalize(g);
}

ArcGraph with_io(ArcGraph g, const std::vector<IOMark>& io) {
  g.io = io;
  return g;
}

namespace {

struct Enumerator {
  int genus, n;
  bool family_needs_io;
  Family family;
  long long budget;
  std::map<std::string, ArcGraph> found;

  void charge(long long w) {
    budget -= w;
    if (budget < 0) throw CapExceeded("enumeration cap exceeded");
  }

  void emit(const ArcGraph& g) {
    if (g.genus != genus) return;
    if (!family_needs_io) {
      if (in_family(g, family)) found.emplace(canonical_key(g), g);
      return;
    }
    int B = g.n_boundaries();
    for (int mask = 0; mask < (1 << B); ++mask) {
      std::vector<IOMark> io(B);
      for (int b = 0; b < B; ++b)
        io[b] = (mask >> b) & 1 ? IOMark::in : IOMark::out;
      ArcGraph h = g;
      h.io = io;
      if (in_family(h, family)) found.emplace(canonical_key(h), h);
    }
  }

  void genera(const std::vector<std::vector<Flag>>& bnd,
              const std::vector<Flag>& inv, const std::vector<int>& grp,
              int blocks, const std::vector<int>& iso_in) {
    int E = (int)inv.size() / 2;
    int B = (int)bnd.size();
    std::vector<int> cyc(blocks, 0);
    for (int v : grp) cyc[v]++;
    for (int b = 0; b < B; ++b)
      if (bnd[b].empty()) cyc[iso_in[b]]++;
    for (int c : cyc)
      if (c == 0) return;
    int total_cyc = 0;
    for (int c : cyc) total_cyc += c;
    // Euler: sum_R (2 - 2 g_R - cyc_R) - E = 2 - 2 genus - B
    int twoH = 2 * blocks - total_cyc - E - 2 + 2 * genus + B;
    if (twoH < 0 || twoH % 2) return;
    int H = twoH / 2;
    std::vector<int> bg(blocks, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      charge(1);
      if (i == blocks - 1) {
        bg[i] = left;
        try {
          emit(graph_with_regions(bnd, inv, grp, bg, iso_in));
        } catch (const StructuralError&) {
        }
        return;
      }
      for (int h = 0; h <= left; ++h) {
        bg[i] = h;
        rec(i + 1, left - h);
      }
    };
    rec(0, H);
  }

  void regions_over(const std::vector<std::vector<Flag>>& bnd,
                    const std::vector<Flag>& inv) {
    ArcGraph shell;
    shell.bnd = bnd;
    shell.inv = inv;
    auto orbs = region_walk(shell);
    int m = (int)orbs.size();
    std::vector<int> iso;
    for (int b = 0; b < (int)bnd.size(); ++b)
      if (bnd[b].empty()) iso.push_back(b);

    std::vector<int> grp(m, 0);
    std::vector<int> iso_in(bnd.size(), 0);
    std::function<void(int, int)> rec_grp = [&](int i, int blocks) {
      charge(1);
      if (i == m) {
        std::function<void(int)> rec_iso = [&](int j) {
          if (j == (int)iso.size()) {
            genera(bnd, inv, grp, blocks, iso_in);
            return;
          }
          for (int b = 0; b < blocks; ++b) {
            iso_in[iso[j]] = b;
            rec_iso(j + 1);
          }
        };
        rec_iso(0);
        return;
      }
      for (int b = 0; b <= std::min(i, blocks); ++b) {
        grp[i] = b;
        rec_grp(i + 1, std::max(blocks, b + 1));
      }
    };
    rec_grp(0, 0);
  }

  void matchings(const std::vector<std::vector<Flag>>& bnd, int F) {
    std::vector<Flag> inv(F, -1);
    std::function<void()> rec = [&]() {
      charge(1);
      int f = 0;
      while (f < F && inv[f] != -1) ++f;
      if (f == F) {
        regions_over(bnd, inv);
        return;
      }
      for (int p = f + 1; p < F; ++p) {
        if (inv[p] != -1) continue;
        inv[f] = p;
        inv[p] = f;
        rec();
        inv[f] = -1;
        inv[p] = -1;
      }
    };
    rec();
  }

  void run(int max_edges) {
    for (int E = 1; E <= max_edges; ++E) {
      int F = 2 * E;
      std::vector<int> counts(n + 1, 0);
      std::function<void(int, int)> rec = [&](int b, int left) {
        if (b == n) {
          counts[b] = left;
          std::vector<std::vector<Flag>> bnd(n + 1);
          int next = 0;
          for (int i = 0; i <= n; ++i)
            for (int c = 0; c < counts[i]; ++c) bnd[i].push_back(next++);
          matchings(bnd, F);
          return;
        }
        for (int c = 0; c <= left; ++c) {
          counts[b] = c;
          rec(b + 1, left - c);
        }
      };
      rec(0, F);
    }
  }
};

} // namespace

std::vector<ArcGraph> enumerate_graphs(int genus, int n, int max_edges,
                                       Family family, long long work_cap) {
  if (genus < 0 || n < 0 || max_edges < 1)
    throw std::invalid_argument("enumerate: bad arguments");
  Enumerator en;
  en.genus = genus;
  en.n = n;
  en.family = family;
  en.family_needs_io = family == Family::io || family == Family::bar_io ||
                       family == Family::larc || family == Family::tree_cp;
  en.budget = work_cap;
  en.run(max_edges);
  std::vector<ArcGraph> out;
  for (auto& [k, g] : en.found) out.push_back(g);
  return out;
}

} // namespace arcops
