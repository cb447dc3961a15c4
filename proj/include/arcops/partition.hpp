#ifndef ARCOPS_PARTITION_HPP
#define ARCOPS_PARTITION_HPP

#include "arcops/formal_sum.hpp"
#include "arcops/graph.hpp"

namespace arcops {

// A partitioned arc graph is an arc graph whose "no parallel arcs" condition
// is relaxed: parallel copies of one underlying arc are allowed and are
// recorded by the analysis below.  The expanded graph is the value; base,
// multiplicities and the copy structure are derived.
struct PartitionedArcGraph {
  ArcGraph g;    // expanded graph
  ArcGraph base; // underlying arc graph (parallel classes collapsed)
  std::vector<int> mult;         // per base edge
  std::vector<int> base_edge_of; // per expanded edge
  std::vector<int> copy_of;      // per expanded edge, 0..mult-1 within its run

  int weight() const { return g.n_arcs(); }          // total parallel count
  int degree() const { return base.n_arcs() - 1; }   // cell dimension
};

// Analyze an expanded graph: find parallel squares, collapse runs, rebuild
// the base with its region data.  Throws StructuralError if the graph is not
// an expansion of a legal arc graph.
PartitionedArcGraph make_partitioned(const ArcGraph& expanded);

// Insert extra parallel copies: edge e gets mult[e] >= 1 copies.  Region
// data, angle marks and io marks are transported; angles between new copies
// are marked new_angle_mark (when the graph is angle-marked).
ArcGraph expand_edges(const ArcGraph& g, const std::vector<int>& mult,
                      int new_angle_mark = 1);

// Is the angle (f, succ f) partitioning (between two parallel copies)?
std::vector<char> partitioning_angles(const PartitionedArcGraph& p);

// Twisted test for partitioned graphs in the angle-marked setting: the base
// is twisted and both edges of the base outer angle carry a parallel copy.
bool is_twisted_partitioned(const PartitionedArcGraph& p, int boundary);

// The partitioning operator truncated at total weight N: all multiplicity
// assignments with sum <= N, with the shuffle sign of the degree-1 edge
// lines.  Terms are expanded graphs.
FormalSum<ArcGraph> expand_sum(const ArcGraph& base, int weight_cap);

// The in/out sign convention: lines are indexed by the inner angles at the
// in-boundaries instead of the edges.  New partitioning angles at the
// in-boundaries are the inserted lines.
int expansion_sign_io(const ArcGraph& base, const std::vector<int>& mult);

// Angle-marked version: requires angle marks (or io marks, from which the
// standard marking is synthesized); new partitioning angles are marked 1.
FormalSum<ArcGraph> expand_angle_sum(const ArcGraph& base, int weight_cap);

// Standard angle marking: constant 1, or for io graphs mark all outside
// angles and all angles at in-boundaries 1 and inner out-angles 0.
ArcGraph standard_marking(const ArcGraph& g);

// Ribbon version of the partitioning operator: all iterated vertex
// insertions with total weight (#edges of the result) <= N.
FormalSum<MarkedRibbonGraph> expand_ribbon_sum(const MarkedRibbonGraph& base,
                                               int weight_cap);

} // namespace arcops

#endif
