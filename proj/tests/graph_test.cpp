#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcops/build.hpp"
#include "arcops/differential.hpp"
#include "arcops/enumerate.hpp"
#include "arcops/graph.hpp"

using namespace arcops;

// one arc joining boundary 0 to boundary 1 on the annulus
static ArcGraph annulus1() { return quasi_filling_graph({{0}, {1}}, {1, 0}); }

// two disjoint non-separating arcs on the once-holed torus
static ArcGraph torus2() {
  // flag order at the single boundary: a1 b1 a2 b2 with a1~a2, b1~b2
  return quasi_filling_graph({{0, 1, 2, 3}}, {2, 3, 0, 1});
}

// two arcs joining boundary 0 to boundary 1 on the annulus, in the unique
// legal (non-parallel) configuration; twisted at both boundaries
static ArcGraph annulus2() {
  return quasi_filling_graph({{0, 1}, {2, 3}}, {2, 3, 0, 1});
}

TEST_CASE("smallest legal graph validates") {
  ArcGraph g = annulus1();
  CHECK(g.genus == 0);
  CHECK(validate(g).ok);
  auto orbs = region_walk(g);
  CHECK(orbs.size() == 1);
  CHECK(orbs[0].size() == 2);
}

TEST_CASE("wrong genus breaks the Euler identity") {
  ArcGraph g = annulus1();
  g.genus = 1;
  auto rep = validate(g);
  CHECK(!rep.ok);
  bool euler = false;
  for (const auto& v : rep.violations)
    if (v.find("Euler") != std::string::npos) euler = true;
  CHECK(euler);
}

TEST_CASE("once-holed torus pair: Euler identity by hand") {
  ArcGraph g = torus2();
  CHECK(g.genus == 1);
  CHECK(validate(g).ok);
  // sum chi(R) - |E| = 1 - 2 = -1 = 2 - 2*1 - 1
  int chi = 0;
  for (const auto& r : g.regions) chi += region_chi(r);
  CHECK(chi - g.n_arcs() == -1);
  CHECK(g.regions.size() == 1);
}

TEST_CASE("dangling flag reference is a structural error") {
  ArcGraph g = annulus1();
  g.bnd[1].clear(); // flag 1 no longer attached anywhere
  CHECK_THROWS_AS(validate(g), StructuralError);
}

TEST_CASE("classification of the basic graphs") {
  auto c = classify(annulus1());
  CHECK(c.exhaustive);
  CHECK(c.quasi_filling);
  CHECK(c.twisted_at.empty());

  auto ct = classify(torus2());
  CHECK(ct.exhaustive);
  CHECK(ct.quasi_filling);

  // twisted annulus pair: first and last arcs at 0 cobound a square across
  // the outside angle
  ArcGraph tw = annulus2();
  CHECK(validate(tw).ok);
  auto cl = classify(tw);
  CHECK(cl.twisted_at.count(0) == 1);
  CHECK(cl.twisted_at.count(1) == 1);

  // the other flag order at boundary 1 makes the two arcs parallel: the
  // square between them crosses two inner angles, which is exactly the
  // expansion of the one-arc annulus and not a legal arc graph
  ArcGraph par = quasi_filling_graph({{0, 1}, {3, 2}}, {2, 3, 0, 1});
  CHECK(!validate(par).ok);
}

TEST_CASE("isolated boundary vertex: not exhaustive") {
  // arc 0-1 with flagless boundary 2 inside the square region
  ArcGraph g = graph_with_regions({{0}, {1}, {}}, {1, 0}, {0}, {0}, {0, 0, 0});
  CHECK(validate(g).ok);
  CHECK(g.genus == 0);
  auto c = classify(g);
  CHECK(!c.exhaustive);
  CHECK(!c.quasi_filling);
}

TEST_CASE("in/out predicates need io marks") {
  ArcGraph g = annulus1();
  auto c = classify(g);
  CHECK(!c.in_out_only); // absent marking: predicate not asserted
  ArcGraph h = with_io(g, {IOMark::in, IOMark::out});
  auto ch = classify(h);
  CHECK(ch.in_out_only);
  CHECK(ch.hits_all_in);
  CHECK(ch.untwisted_at_in);
}

TEST_CASE("duality round-trip on the torus pair") {
  ArcGraph g = torus2();
  MarkedRibbonGraph d = dual_ribbon(g);
  CHECK(d.n_vertices() == 1);
  CHECK(d.n_edges() == 2);
  CHECK(ribbon_cycles(d).size() == 1);
  CHECK(ribbon_genus(d) == 1);
  ArcGraph back = arc_from_dual(d);
  CHECK(canonical_key(back) == canonical_key(g));
}

TEST_CASE("dual of a non-quasi-filling graph is a domain error") {
  ArcGraph g = graph_with_regions({{0}, {1}, {}}, {1, 0}, {0}, {0}, {0, 0, 0});
  CHECK_THROWS_AS(dual_ribbon(g), std::domain_error);
}

TEST_CASE("duality round-trips over the small quasi-filling corpus") {
  for (auto [gg, nn] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 2}}) {
    auto corpus = enumerate_graphs(gg, nn, 3, Family::quasi_filling);
    CHECK(!corpus.empty());
    for (const auto& g : corpus) {
      MarkedRibbonGraph d = dual_ribbon(g);
      CHECK(validate_ribbon(d).ok);
      ArcGraph back = arc_from_dual(d);
      CHECK(canonical_key(back) == canonical_key(g));
    }
  }
}

TEST_CASE("insert then remove vertex is the identity") {
  // a hundred (graph, edge) pairs drawn from the quasi-filling duals
  int pairs = 0;
  for (auto [gg, nn] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 0}}) {
    for (const auto& g : enumerate_graphs(gg, nn, 3, Family::quasi_filling)) {
      MarkedRibbonGraph d = dual_ribbon(g);
      for (int e = 0; e < d.n_edges() && pairs < 100; ++e, ++pairs) {
        MarkedRibbonGraph ins = insert_vertex(d, e);
        CHECK(ribbon_cycles(ins).size() == ribbon_cycles(d).size());
        MarkedRibbonGraph back = remove_vertex(ins, ins.n_vertices() - 1);
        back.partitioned_role = d.partitioned_role;
        CHECK(ribbon_key(back) == ribbon_key(d));
      }
      if (pairs >= 100) break;
    }
    if (pairs >= 100) break;
  }
  CHECK(pairs == 100);
}

TEST_CASE("hand enumeration counts") {
  auto e1 = enumerate_graphs(0, 1, 1, Family::exhaustive);
  CHECK(e1.size() == 1);
  CHECK(canonical_key(e1[0]) == canonical_key(annulus1()));

  auto qf = enumerate_graphs(1, 0, 2, Family::quasi_filling);
  bool has_torus2 = false;
  for (const auto& g : qf)
    if (canonical_key(g) == canonical_key(torus2())) has_torus2 = true;
  CHECK(has_torus2);

  for (int k = 1; k <= 3; ++k)
    CHECK(enumerate_graphs(0, 0, k, Family::all).empty());
}

TEST_CASE("differential: torus pair") {
  ArcGraph g = torus2();
  CHECK(differential(g, Family::quasi_filling).is_zero());
  // removing either arc leaves the one-arc non-separating graph (a genus-0
  // region with two boundary cycles): legal in the "all" family
  for (int j = 0; j < 2; ++j) {
    ArcGraph r = remove_arc(g, j);
    CHECK(validate(r).ok);
    CHECK(r.n_arcs() == 1);
    CHECK(r.genus == 1);
    CHECK(r.regions.size() == 1);
    CHECK(r.regions[0].cycles.size() == 2);
    CHECK(in_family(r, Family::all));
  }
  // the two signed summands hit the same canonical graph with opposite
  // signs, so the full-family differential collapses to zero
  CHECK(canonical_key(remove_arc(g, 0)) == canonical_key(remove_arc(g, 1)));
  CHECK(differential(g, Family::all).is_zero());
}

TEST_CASE("differential of a one-arc graph is empty") {
  CHECK(differential(annulus1(), Family::all).is_zero());
}

TEST_CASE("d squared vanishes over the enumerated corpus") {
  for (auto fam : {Family::all, Family::exhaustive, Family::quasi_filling}) {
    for (auto [gg, nn] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}) {
      auto corpus = enumerate_graphs(gg, nn, 4, fam);
      for (const auto& g : corpus) {
        auto dd = differential(differential(g, fam), fam);
        CHECK(dd.is_zero());
      }
    }
  }
}

TEST_CASE("region walk partitions the flags; Euler holds on the corpus") {
  auto corpus = enumerate_graphs(0, 2, 3, Family::all);
  CHECK(!corpus.empty());
  for (const auto& g : corpus) {
    auto orbs = region_walk(g);
    int total = 0;
    for (const auto& o : orbs) total += (int)o.size();
    CHECK(total == g.n_flags());
    CHECK(g.n_flags() == 2 * g.n_arcs());
    CHECK(validate(g).ok);
  }
}

TEST_CASE("classification is stable under relabeling") {
  auto corpus = enumerate_graphs(0, 2, 2, Family::all);
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                         {1, 2, 0}};
  for (const auto& g : corpus) {
    auto c = classify(g);
    for (const auto& p : perms) {
      ArcGraph h = relabel_boundaries(g, p);
      CHECK(validate(h).ok);
      auto ch = classify(h);
      CHECK(ch.exhaustive == c.exhaustive);
      CHECK(ch.quasi_filling == c.quasi_filling);
      std::set<int> expect;
      for (int b : c.twisted_at) expect.insert(p[b]);
      CHECK(ch.twisted_at == expect);
    }
  }
}

TEST_CASE("json round-trip is bit-exact") {
  for (const auto& g :
       {annulus1(), torus2(), annulus2(),
        graph_with_regions({{0}, {1}, {}}, {1, 0}, {0}, {0}, {0, 0, 0})}) {
    std::string s = graph_to_json(g);
    ArcGraph back = graph_from_json(s);
    CHECK(canonical_key(back) == canonical_key(g));
    CHECK(graph_to_json(back) == s);
  }
  // io + angle marks survive
  ArcGraph g = with_io(annulus1(), {IOMark::in, IOMark::out});
  g.angle_marks = std::vector<int>{1, 0};
  std::string s = graph_to_json(g);
  ArcGraph back = graph_from_json(s);
  CHECK(canonical_key(back) == canonical_key(g));
  CHECK(graph_to_json(back) == s);
}
