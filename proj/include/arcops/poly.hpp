#ifndef ARCOPS_POLY_HPP
#define ARCOPS_POLY_HPP

#include "arcops/formal_sum.hpp"
#include "arcops/tensor.hpp"

namespace arcops {

// Words over {0..n}: elements of the cyclic associative operad.  A word
// lists the letters in multiplication order; substitution rotates the
// second word to start at 0 and splices its tail in.
using CycWord = std::vector<int>;
CycWord word_substitute(const CycWord& x, int i, const CycWord& y);

// trace correlator of a word: integral of the product in word order, with
// the super-sign of the rearrangement
Multilinear y_cyc_form(const GradedAlgebra& A, const CycWord& word);

// Labelled polygons: a polygon is the cyclic class of its side-label word;
// the canonical representative starts at label 0.  Works for the plain
// n-gon and for the 2n-gon with preferred sides (the unlabelled sides carry
// no data).
CycWord polygon_canonical(const CycWord& w);
CycWord glue_polygons(const CycWord& p, int i, const CycWord& q);
Multilinear y_poly_form(const GradedAlgebra& A, const CycWord& p);

// Polygons with non-crossing diagonals: sides labelled 0..n cyclically; a
// chord cuts off the contiguous side range [a..b] (never containing 0).
struct PolyInf {
  int n = 0; // sides 0..n
  std::vector<std::pair<int, int>> chords;
};
std::string polyinf_key(const PolyInf& p);
bool polyinf_valid(const PolyInf& p);

// A-infinity structure: mu[k] is the (k+1)-slot form of mu_k for k >= 1
// given as <a_0, mu_k(a_1..a_k)>; entries may be absent (zero map)
struct AInfinity {
  int dim = 0;
  std::vector<int> degrees;
  std::vector<Multilinear> seed; // seed[k] has k+1 single-axis slots
  Mat casimir;
};
// seeds from a (dg) algebra: mu_2 = multiplication (and mu_k = 0 otherwise)
AInfinity ainf_from_algebra(const GradedAlgebra& A);
// rejects seeds whose correlators are not cyclically invariant
void check_equivariant(const AInfinity& ai);

// recursive Casimir-composition over the dual tree of the decomposition
Multilinear y_poly_infty(const AInfinity& ai, const PolyInf& p);

// differential: insert one admissible chord with the region-line sign
FormalSum<PolyInf> polyinf_differential(const PolyInf& p);

} // namespace arcops

#endif
