#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcops/build.hpp"
#include "arcops/correlators.hpp"
#include "arcops/differential.hpp"
#include "arcops/enumerate.hpp"
#include "arcops/gluing.hpp"
#include "arcops/hochschild.hpp"
#include "arcops/partition.hpp"
#include "arcops/suites.hpp"

using namespace arcops;
using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ArcGraph load_graph(const std::string& path) {
  return graph_from_json(slurp(path));
}

GradedAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(slurp(path));
}

json graph_json(const ArcGraph& g) { return json::parse(graph_to_json(g)); }

json sum_json(const FormalSum<ArcGraph>& s, int weight_cap) {
  json out;
  out["weight_cap"] = weight_cap;
  out["terms"] = json::array();
  for (const auto& [k, t] : s.terms) {
    auto p = make_partitioned(t.value);
    json jt;
    jt["coeff"] = t.coeff.str();
    jt["graph"] = graph_json(p.base);
    json jm;
    for (size_t e = 0; e < p.mult.size(); ++e)
      jm[std::to_string(e)] = p.mult[e];
    jt["mult"] = jm;
    out["terms"].push_back(jt);
  }
  return out;
}

json ribbon_json(const MarkedRibbonGraph& g) {
  json j;
  j["vertices"] = g.vertices;
  json arcs = json::array();
  for (int f = 0; f < g.n_flags(); ++f)
    if (f < g.inv[f]) arcs.push_back(json::array({f, g.inv[f]}));
  j["edges"] = arcs;
  j["cycle_marks"] = g.cycle_marks;
  j["genus"] = ribbon_genus(g);
  j["role"] = g.partitioned_role ? "partitioned" : "marked";
  if (g.angle_marks) j["angle_marks"] = *g.angle_marks;
  return j;
}

Vec parse_element(const json& j, int dim) {
  Vec v(dim, Rat(0));
  if ((int)j.size() != dim) throw std::runtime_error("element size mismatch");
  for (int i = 0; i < dim; ++i) v[i] = Rat::parse(j.at(i).get<std::string>());
  return v;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact operations on arc and ribbon graphs"};
  app.require_subcommand(1);

  std::string graph_path, graph2_path, algebra_path, inputs_path;
  std::string family_str = "all";
  std::string mode_str = "topological", suite_name = "all", corpus = "small";
  int slot = 1, weight = 4, genus = 0, boundaries = 0, edges = 2;
  bool angle = false;

  auto* v = app.add_subcommand("validate", "check the graph invariants");
  v->add_option("graph", graph_path)->required();

  auto* c = app.add_subcommand("classify", "combinatorial classification");
  c->add_option("graph", graph_path)->required();

  auto* d = app.add_subcommand("dual", "dual marked ribbon graph");
  d->add_option("graph", graph_path)->required();

  auto* e = app.add_subcommand("expand", "partitioning operator, truncated");
  e->add_option("graph", graph_path)->required();
  e->add_option("--weight", weight, "total weight cap");
  e->add_flag("--angle", angle, "angle-marked version");

  auto* g = app.add_subcommand("glue", "operadic gluing at a boundary");
  g->add_option("graph", graph_path)->required();
  g->add_option("slot", slot)->required();
  g->add_option("other", graph2_path)->required();
  g->add_option("--mode", mode_str, "topological|algebraic");

  auto* di = app.add_subcommand("diff", "cell differential");
  di->add_option("graph", graph_path)->required();
  di->add_option("--family", family_str);

  auto* en = app.add_subcommand("enumerate", "canonical family enumeration");
  en->add_option("--genus", genus);
  en->add_option("--boundaries", boundaries, "n (labels run 0..n)");
  en->add_option("--edges", edges);
  en->add_option("--family", family_str);

  auto* co = app.add_subcommand("correlate", "evaluate a correlator");
  co->add_option("graph", graph_path)->required();
  co->add_option("algebra", algebra_path)->required();
  co->add_option("--inputs", inputs_path)->required();

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", suite_name, "suite name or 'all'");
  ve->add_option("--corpus-size", corpus, "small|full");

  auto* hc =
      app.add_subcommand("homology-cells", "ranks of the cell differential");
  hc->add_option("--genus", genus);
  hc->add_option("--boundaries", boundaries);
  hc->add_option("--edges", edges);
  hc->add_option("--family", family_str);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*v) {
      ArcGraph gr = load_graph(graph_path);
      auto rep = validate(gr);
      json out;
      out["ok"] = rep.ok;
      out["violations"] = rep.violations;
      std::cout << out.dump(2) << "\n";
      return rep.ok ? 0 : kExitVerify;
    }
    if (*c) {
      ArcGraph gr = load_graph(graph_path);
      auto cl = classify(gr);
      json out;
      out["exhaustive"] = cl.exhaustive;
      out["quasi_filling"] = cl.quasi_filling;
      if (gr.io) {
        out["in_out_only"] = cl.in_out_only;
        out["hits_all_in"] = cl.hits_all_in;
        out["untwisted_at_in"] = cl.untwisted_at_in;
        out["tree_cp_provisional"] = cl.tree_cp;
      }
      out["twisted_at"] =
          std::vector<int>(cl.twisted_at.begin(), cl.twisted_at.end());
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*d) {
      ArcGraph gr = load_graph(graph_path);
      std::cout << ribbon_json(dual_ribbon(gr)).dump(2) << "\n";
      return 0;
    }
    if (*e) {
      ArcGraph gr = load_graph(graph_path);
      auto s = angle ? expand_angle_sum(gr, weight) : expand_sum(gr, weight);
      std::cout << sum_json(s, weight).dump(2) << "\n";
      return 0;
    }
    if (*g) {
      ArcGraph g1 = load_graph(graph_path);
      ArcGraph g2 = load_graph(graph2_path);
      GlueMode mode = mode_str == "algebraic" ? GlueMode::algebraic
                                              : GlueMode::topological;
      auto r = g1.angle_marks && g2.angle_marks
                   ? angle_glue(g1, slot, g2, 0, mode)
                   : glue(g1, slot, g2, 0, mode);
      json out;
      if (r) {
        out["zero"] = false;
        out["graph"] = graph_json(*r);
      } else {
        out["zero"] = true;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*di) {
      auto fam = family_from_name(family_str);
      if (!fam) {
        std::cerr << "unknown family " << family_str << "\n";
        return kExitUsage;
      }
      ArcGraph gr = load_graph(graph_path);
      std::cout << sum_json(differential(gr, *fam), gr.n_arcs()).dump(2)
                << "\n";
      return 0;
    }
    if (*en) {
      auto fam = family_from_name(family_str);
      if (!fam) {
        std::cerr << "unknown family " << family_str << "\n";
        return kExitUsage;
      }
      auto graphs = enumerate_graphs(genus, boundaries, edges, *fam);
      json out;
      out["count"] = graphs.size();
      out["graphs"] = json::array();
      for (const auto& gr : graphs) out["graphs"].push_back(graph_json(gr));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*co) {
      ArcGraph gr = load_graph(graph_path);
      GradedAlgebra A = load_algebra(algebra_path);
      json in = json::parse(slurp(inputs_path));
      std::string kind = in.value("kind", "angle");
      Rat value(0);
      if (kind == "tensor") {
        std::vector<std::vector<Vec>> words;
        for (const auto& jw : in.at("words")) {
          std::vector<Vec> w;
          for (const auto& je : jw) w.push_back(parse_element(je, A.dim()));
          words.push_back(w);
        }
        value = y_tensor(A, gr, words);
      } else if (kind == "angle") {
        ArcGraph m = gr.angle_marks ? gr : standard_marking(gr);
        std::map<Flag, Vec> decor;
        const auto& jw = in.at("words");
        for (int b = 0; b < m.n_boundaries(); ++b) {
          auto axes = marked_angle_axes(m, b);
          const auto& row = jw.at(b);
          if (row.size() != axes.size())
            throw std::runtime_error(
                "decoration count mismatch at boundary " + std::to_string(b));
          for (size_t t = 0; t < axes.size(); ++t)
            decor[axes[t]] = parse_element(row.at(t), A.dim());
        }
        value = y_partitioned(A, m, decor);
      } else {
        std::cerr << "unknown input kind " << kind << "\n";
        return kExitUsage;
      }
      json out;
      out["value"] = value.str();
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*ve) {
      SuiteOptions opt;
      opt.small_corpus = corpus != "full";
      std::vector<SuiteReport> reports;
      if (suite_name == "all") {
        reports = run_all_suites(opt);
      } else {
        reports.push_back(run_suite(suite_name, opt));
      }
      std::cout << report_to_json(reports);
      bool ok = true;
      json ces = json::array();
      for (const auto& r : reports)
        for (const auto& ch : r.checks)
          if (!ch.pass) {
            ok = false;
            ces.push_back({{"suite", r.suite},
                           {"check", ch.name},
                           {"counterexample", ch.counterexample}});
          }
      if (!ok) {
        std::ofstream ce("counterexamples.json");
        ce << ces.dump(2) << "\n";
      }
      return ok ? 0 : kExitVerify;
    }
    if (*hc) {
      auto fam = family_from_name(family_str);
      if (!fam) {
        std::cerr << "unknown family " << family_str << "\n";
        return kExitUsage;
      }
      // cells graded by arc count; d-matrices between consecutive gradings
      std::vector<std::vector<ArcGraph>> by_edges(edges + 1);
      for (const auto& gr : enumerate_graphs(genus, boundaries, edges, *fam))
        by_edges[gr.n_arcs()].push_back(gr);
      json out;
      out["family"] = family_str;
      out["grading"] = json::array();
      for (int k = 1; k <= edges; ++k) {
        json row;
        row["edges"] = k;
        row["cells"] = by_edges[k].size();
        if (k >= 2 && !by_edges[k - 1].empty() && !by_edges[k].empty()) {
          std::map<std::string, int> index;
          for (size_t i = 0; i < by_edges[k - 1].size(); ++i)
            index[canonical_key(by_edges[k - 1][i])] = (int)i;
          Mat m(by_edges[k - 1].size(), Vec(by_edges[k].size(), Rat(0)));
          for (size_t j = 0; j < by_edges[k].size(); ++j)
            for (const auto& [key, t] :
                 differential(by_edges[k][j], *fam).terms) {
              auto it = index.find(key);
              if (it != index.end()) m[it->second][j] = t.coeff;
            }
          row["rank_d"] = mat_rank(m);
        }
        out["grading"].push_back(row);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const StructuralError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitFormat;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFormat;
  }
  return kExitUsage;
}
