#ifndef ARCOPS_GRAPH_HPP
#define ARCOPS_GRAPH_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

namespace arcops {

// Flags are dense integers 0..F-1.  An arc graph stores, per labelled
// boundary (labels are the indices into bnd), the linearly ordered flags
// incident to it, the fixed-point-free involution pairing flags into arcs,
// and the complementary regions.  Region boundary cycles are derived data
// (orbits of f -> succ(inv(f))); the grouping of cycles into regions, the
// region genera and the placement of flagless boundaries are free data
// constrained by the Euler identity.
using Flag = int;

enum class IOMark { in, out };

struct Region {
  int genus = 0;
  // Each cycle is an orbit of f -> succ(inv(f)), stored as the flag
  // sequence; the full polygon boundary alternates ArcSide(f_t) and the
  // angle side at inv(f_t).
  std::vector<std::vector<Flag>> cycles;
  // Labels of boundaries with no flags lying inside this region.
  std::vector<int> isolated;
};

struct ArcGraph {
  std::vector<std::vector<Flag>> bnd; // bnd[label] = flags in linear order
  std::vector<Flag> inv;              // arc involution
  std::vector<Region> regions;
  int genus = 0; // genus of the ambient surface
  // Optional angle marking: mark of the angle (f, succ(f)), one per flag.
  std::optional<std::vector<int>> angle_marks;
  // Optional in/out marking per boundary.
  std::optional<std::vector<IOMark>> io;
  // Optional external flag names kept for file round-trips.
  std::optional<std::vector<std::string>> flag_names;

  int n_flags() const { return (int)inv.size(); }
  int n_boundaries() const { return (int)bnd.size(); }
  int n_arcs() const { return (int)inv.size() / 2; }
};

// Structural problems (unresolvable references, malformed orders) throw;
// invariant violations are reported.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(const std::string& what) {
    ok = false;
    violations.push_back(what);
  }
};

enum class GraphRole { strict, partitioned };

// ---- derived combinatorics ----------------------------------------------

// boundary label and position of each flag; throws StructuralError if the
// boundary lists are not a partition of 0..F-1.
struct FlagIndex {
  std::vector<int> boundary;
  std::vector<int> pos;
};
FlagIndex index_flags(const ArcGraph& g);

Flag succ_flag(const ArcGraph& g, const FlagIndex& ix, Flag f);
Flag pred_flag(const ArcGraph& g, const FlagIndex& ix, Flag f);

// Orbits of f -> succ(inv(f)), each rotated to start at its minimal flag,
// sorted by minimal flag.
std::vector<std::vector<Flag>> region_walk(const ArcGraph& g);

// Edges as (first flag, second flag) in the global flag order (boundary,
// then position); edge order is by first flag.
struct Edge {
  Flag a, b; // a before b in the global order
};
std::vector<Edge> edge_list(const ArcGraph& g);
std::vector<int> edge_of_flag(const ArcGraph& g,
                              const std::vector<Edge>& edges);

// Euler characteristic of a region: 2 - 2 genus - #cycles (flagless
// boundaries inside count as cycles).
int region_chi(const Region& r);

ValidationReport validate(const ArcGraph& g,
                          GraphRole role = GraphRole::strict);

struct Classification {
  bool exhaustive = false;
  bool quasi_filling = false;
  bool in_out_only = false;   // needs io marks
  bool hits_all_in = false;   // needs io marks
  bool untwisted_at_in = false;
  bool tree_cp = false; // provisional: genus 0, quasi-filling, one out, i/o arcs
  std::set<int> twisted_at;
};
Classification classify(const ArcGraph& g);

bool is_twisted_at(const ArcGraph& g, int boundary);

// Subgraphs keeping one or two arcs, with the removal region bookkeeping.
// Legality of an arc (and twistedness of a boundary) is a property of the
// kept arcs' isotopy classes, so these tests ignore the other arcs.
ArcGraph one_arc_subgraph(const ArcGraph& g, int edge_index);
ArcGraph two_arc_subgraph(const ArcGraph& g, int e1, int e2);

// Families of arc graphs used by enumerate/differential.
enum class Family { all, exhaustive, quasi_filling, io, bar_io, larc, tree_cp };
const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);
bool in_family(const ArcGraph& g, Family f);

// Canonical renaming: flags renumbered in boundary order; regions, cycles
// and isolated lists canonically sorted. Drops flag names.
ArcGraph canonicalize(const ArcGraph& g);
// Structure key: canonical encoding used for dedup and FormalSum terms.
std::string canonical_key(const ArcGraph& g);

// Relabel boundaries by permutation perm (new label of old boundary b is
// perm[b]); io/marks follow.
ArcGraph relabel_boundaries(const ArcGraph& g, const std::vector<int>& perm);

// ---- marked ribbon graphs -------------------------------------------------

struct MarkedRibbonGraph {
  std::vector<std::vector<Flag>> vertices; // cyclic flag order per vertex
  std::vector<Flag> inv;
  // cycle_marks[c] = distinguished first flag of the cycle labelled c;
  // cycles are orbits of next(inv(f)) in this ribbon structure.
  std::vector<Flag> cycle_marks;
  bool partitioned_role = false;
  std::optional<std::vector<int>> angle_marks; // mark of angle (f, next(f))

  int n_flags() const { return (int)inv.size(); }
  int n_vertices() const { return (int)vertices.size(); }
  int n_edges() const { return (int)inv.size() / 2; }
};

// Orbits of N = next \circ inv, each rotated to its minimal flag.
std::vector<std::vector<Flag>> ribbon_cycles(const MarkedRibbonGraph& g);
ValidationReport validate_ribbon(const MarkedRibbonGraph& g);
int ribbon_genus(const MarkedRibbonGraph& g);
std::string ribbon_key(const MarkedRibbonGraph& g);

MarkedRibbonGraph dual_ribbon(const ArcGraph& g);
ArcGraph arc_from_dual(const MarkedRibbonGraph& g);

MarkedRibbonGraph insert_vertex(const MarkedRibbonGraph& g, int edge_index);
MarkedRibbonGraph remove_vertex(const MarkedRibbonGraph& g, int vertex);

// ---- file format -----------------------------------------------------------

std::string graph_to_json(const ArcGraph& g);
ArcGraph graph_from_json(const std::string& text);

} // namespace arcops

#endif
