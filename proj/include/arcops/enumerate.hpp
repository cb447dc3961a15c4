#ifndef ARCOPS_ENUMERATE_HPP
#define ARCOPS_ENUMERATE_HPP

#include "arcops/graph.hpp"

namespace arcops {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complete duplicate-free enumeration of the arc graphs on the surface of
// genus g with n+1 labelled boundaries that have at most max_edges arcs and
// lie in the family.  For i/o families every admissible in/out marking is a
// separate graph.  Deterministic order (canonical key).  Throws CapExceeded
// instead of truncating.
std::vector<ArcGraph> enumerate_graphs(int genus, int n, int max_edges,
                                       Family family,
                                       long long work_cap = 200000000LL);

} // namespace arcops

#endif
