#ifndef ARCOPS_GLUING_HPP
#define ARCOPS_GLUING_HPP

#include "arcops/formal_sum.hpp"
#include "arcops/partition.hpp"

namespace arcops {

enum class GlueMode { topological, algebraic };

// Raw outcome before the zero rules are applied.  graph is the glued graph
// with closed loops deleted; it is absent when no arcs remain or when the
// boundaries cannot be matched.
struct GlueResult {
  bool matched = false;
  bool degenerate = false; // angle gluing outside the perfectly matched case
  bool both_twisted = false;
  int closed_loops = 0;
  std::optional<ArcGraph> graph;
};

// Glue boundary i of a to boundary j of b, matching the expanded arcs in
// reversed-vs-forward linear order.  Result labels follow the operadic
// splice for j == 0 (b's labels 1..n replace slot i) and the order-preserving
// renumbering otherwise.
GlueResult glue_raw(const ArcGraph& a, int i, const ArcGraph& b, int j = 0);
GlueResult self_glue_raw(const ArcGraph& a, int i, int j);

// Angle-matched gluing of angle-marked graphs (grouped flags, fan-out
// duplication); marks transported per the gluing rule.
GlueResult angle_glue_raw(const ArcGraph& a, int i, const ArcGraph& b,
                          int j = 0);
GlueResult angle_self_glue_raw(const ArcGraph& a, int i, int j);

// Mode application: zero (nullopt) on mismatch, degeneracy, closed loops,
// and in topological mode on a both-twisted pair.
std::optional<ArcGraph> glue(const ArcGraph& a, int i, const ArcGraph& b,
                             int j, GlueMode mode);
std::optional<ArcGraph> self_glue(const ArcGraph& a, int i, int j,
                                  GlueMode mode);
std::optional<ArcGraph> angle_glue(const ArcGraph& a, int i, const ArcGraph& b,
                                   int j, GlueMode mode);

// Iterated gluing of all listed (out-boundary, in-boundary) pairs over the
// disjoint union of the given graphs.  Boundary references are
// (graph index, boundary label).  Remaining boundaries keep their
// input order.  The result does not depend on the pair order; callers may
// verify via permuted calls.
struct BoundaryRef {
  int graph;
  int boundary;
};
std::optional<ArcGraph> prop_compose(const std::vector<ArcGraph>& graphs,
                                     const std::vector<std::pair<BoundaryRef, BoundaryRef>>& pairs,
                                     GlueMode mode, bool use_angle);

// Associated-graded composition: algebraic gluing termwise, keeping only the
// terms of top degree deg(x)+deg(y); inputs must be homogeneous.
FormalSum<ArcGraph> graded_compose(const FormalSum<ArcGraph>& x, int i,
                                   const FormalSum<ArcGraph>& y,
                                   bool use_angle = false);

int partitioned_degree(const ArcGraph& expanded);

// Koszul corrector of the chain-level composition: the shuffle signs of the
// degree-1 edge lines of the inputs against the result.  With this twist the
// partitioning operator is strictly operadic.
int composition_sign(const ArcGraph& x, const ArcGraph& y,
                     const ArcGraph& result);

// composition of formal sums of partitioned graphs, with the corrector and
// an optional weight cap (<0 for no cap)
FormalSum<ArcGraph> compose_sums(const FormalSum<ArcGraph>& x, int i,
                                 const FormalSum<ArcGraph>& y, GlueMode mode,
                                 bool use_angle, int weight_cap = -1);

} // namespace arcops

#endif
