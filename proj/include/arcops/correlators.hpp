#ifndef ARCOPS_CORRELATORS_HPP
#define ARCOPS_CORRELATORS_HPP

#include <map>
#include <optional>

#include "arcops/algebra.hpp"
#include "arcops/graph.hpp"
#include "arcops/tensor.hpp"

namespace arcops {

// cyclic integral of a sequence of elements
Rat y_polygon(const GradedAlgebra& A, const std::vector<Vec>& sides);

// integral against the Euler-element factor e^{-chi+1} for a region of the
// given genus and number of boundary cycles; requires a commutative algebra
// unless the region is a disk
Rat y_surface(const GradedAlgebra& A, int genus, int n_cycles,
              const std::vector<Vec>& sides);

// 1-marked angles of a boundary in decoration order: the outside angle
// first, then the marked angles in the boundary's linear order.  Angles are
// named by their first flag.
std::vector<Flag> marked_angle_axes(const ArcGraph& g, int boundary);

// product over complementary regions of the surface correlator; inputs are
// keyed by the marked angle's flag
Rat y_partitioned(const GradedAlgebra& A, const ArcGraph& g,
                  const std::map<Flag, Vec>& inputs);

// same correlator as a multilinear form; slot order = boundary labels, axis
// order = marked_angle_axes
Multilinear y_angle_form(const GradedAlgebra& A, const ArcGraph& g);

// dual (ribbon) version: product over ribbon vertices
Rat y_ribbon(const GradedAlgebra& A, const MarkedRibbonGraph& g,
             const std::map<Flag, Vec>& inputs);

// tensor-algebra correlator: product of pairings over the expanded arcs;
// slot b has one axis per flag of boundary b in linear order
Multilinear y_tensor_form(const GradedAlgebra& A, const ArcGraph& g);
Rat y_tensor(const GradedAlgebra& A, const ArcGraph& g,
             const std::vector<std::vector<Vec>>& words);

// the tensor-word action of an in/out graph: decorate the in boundaries,
// read the out boundaries; zero (nullopt) on word-length mismatch
std::optional<std::vector<std::vector<Vec>>> act_vector(
    const GradedAlgebra& A, const ArcGraph& g,
    const std::vector<std::vector<Vec>>& in_words);

// Hochschild correlator: cochains enter as their cyclic tensors
// (single-slot forms, slot size = arity + 1); boundary i's form f_tilde[i].
// Sums the expansion terms whose marked-angle counts match the arities.
Rat y_hochschild(const GradedAlgebra& A, const ArcGraph& alpha,
                 const std::vector<Multilinear>& f_tilde);

// enumerate the contributing multiplicity vectors
std::vector<std::vector<int>> hochschild_partitions(
    const ArcGraph& alpha, const std::vector<int>& marked_targets);

// contract all slots except free_slot (whose marked-angle count must equal
// free_arity); returns the induced single-slot form.  Entries of f_tilde at
// the free slot are ignored.
Multilinear y_hochschild_partial(const GradedAlgebra& A, const ArcGraph& alpha,
                                 const std::vector<Multilinear>& f_tilde,
                                 int free_slot, int free_arity);

// Feynman rules: one cyclic form per ribbon vertex, one Casimir per edge
Rat feynman(const GradedAlgebra& A, const MarkedRibbonGraph& g,
            const std::vector<Multilinear>& vertex_forms);

// cylinder correlator with a cut at (i, j), 1-based, and its closed form
Rat y_cylinder(const GradedAlgebra& A, const std::vector<Vec>& a,
               const std::vector<Vec>& b, int i, int j);
Rat y_cylinder_closed(const GradedAlgebra& A, const std::vector<Vec>& a,
                      const std::vector<Vec>& b);

// contract a form slot-wise against single-slot forms (one per slot)
Rat contract_with(const Multilinear& form,
                  const std::vector<Multilinear>& factors);

} // namespace arcops

#endif
