#ifndef ARCOPS_SIGN_HPP
#define ARCOPS_SIGN_HPP

#include <stdexcept>
#include <vector>

namespace arcops {

// Global sign routines.  Every Koszul sign in the library is computed here
// from an explicit permutation of (graded) symbols; no module rolls its own
// parity formula.

// Sign of a permutation given in one-line notation: perm[i] = image of i.
inline int perm_sign(const std::vector<int>& perm) {
  int s = 1;
  const int n = (int)perm.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

// Koszul super-sign of reordering graded symbols.  Symbol t has degree
// degrees[t] and sits at source position t; the target order lists the
// symbols as target[0], target[1], ....  Each transposition of two odd
// symbols contributes a factor -1.
inline int koszul_sign(const std::vector<int>& degrees,
                       const std::vector<int>& target) {
  if (degrees.size() != target.size())
    throw std::invalid_argument("koszul_sign: size mismatch");
  int s = 1;
  const int n = (int)target.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (target[i] > target[j] && (degrees[target[i]] & 1) &&
          (degrees[target[j]] & 1))
        s = -s;
  return s;
}

// Shuffle sign for the partitioning operator: degree-1 lines indexed by the
// edges E' = (all edges except the last).  Source order: the lines of the
// base edges e_1..e_{k-1} followed by the n-k new lines in their insertion
// order.  Target order: lines of the expanded edges, grouped by base edge in
// copy order, where copy 1 of e_i (i<k) carries e_i's original line and all
// other copies carry new lines.
inline int expansion_sign(const std::vector<int>& parts) {
  const int k = (int)parts.size();
  int total = 0;
  for (int p : parts) total += p;
  const int n_new = total - k;
  // Build target order over symbols: 0..k-2 are the original lines,
  // k-1..k-2+n_new the new lines.
  std::vector<int> target;
  target.reserve(k - 1 + n_new);
  int next_new = k - 1;
  for (int i = 0; i < k; ++i) {
    if (i < k - 1) {
      target.push_back(i);
      for (int c = 1; c < parts[i]; ++c) target.push_back(next_new++);
    } else {
      // Last base edge: its final copy is the excluded last line; the other
      // copies take new lines.
      for (int c = 1; c < parts[i]; ++c) target.push_back(next_new++);
    }
  }
  std::vector<int> degrees(target.size(), 1);
  return koszul_sign(degrees, target);
}

} // namespace arcops

#endif
