#ifndef ARCOPS_BUILD_HPP
#define ARCOPS_BUILD_HPP

#include "arcops/graph.hpp"

namespace arcops {

// Construction helpers.  The ambient genus is always recovered from the
// Euler identity, so builders never take it as input.

// All complementary regions are disks (one region per walk orbit).  Only
// valid for exhaustive configurations.
ArcGraph quasi_filling_graph(const std::vector<std::vector<Flag>>& bnd,
                             const std::vector<Flag>& inv);

// General form: orbit_group[i] = block index of the i-th walk orbit (orbits
// sorted by minimal flag); block_genus per block; isolated_in[b] = block
// containing flagless boundary b (ignored for boundaries with flags).
ArcGraph graph_with_regions(const std::vector<std::vector<Flag>>& bnd,
                            const std::vector<Flag>& inv,
                            const std::vector<int>& orbit_group,
                            const std::vector<int>& block_genus,
                            const std::vector<int>& isolated_in);

ArcGraph with_io(ArcGraph g, const std::vector<IOMark>& io);

} // namespace arcops

#endif
