#ifndef ARCOPS_DIFFERENTIAL_HPP
#define ARCOPS_DIFFERENTIAL_HPP

#include "arcops/formal_sum.hpp"
#include "arcops/graph.hpp"

namespace arcops {

// Removes the chosen arc, merging the two adjacent region sides with the
// Euler-forced bookkeeping (distinct regions fuse; same region either gains
// a boundary cycle or a handle).  Returns the graph without any family or
// legality filtering; throws on structural impossibility (last arc of the
// graph is fine, the result just fails validation).
ArcGraph remove_arc(const ArcGraph& g, int edge_index);

// Remove several arcs at once (same bookkeeping, union-find over regions).
// At least one arc must remain.
ArcGraph remove_arcs(const ArcGraph& g, const std::vector<int>& edge_indices);

// Cell differential: sum over arcs of +/- (graph minus that arc), keeping
// only summands inside the family.  Sign of the j-th arc (0-based) in the
// global edge order is (-1)^j.
FormalSum<ArcGraph> differential(const ArcGraph& g, Family family);

FormalSum<ArcGraph> differential(const FormalSum<ArcGraph>& s, Family family);

} // namespace arcops

#endif
