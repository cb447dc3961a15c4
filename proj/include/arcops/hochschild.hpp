#ifndef ARCOPS_HOCHSCHILD_HPP
#define ARCOPS_HOCHSCHILD_HPP

#include "arcops/correlators.hpp"
#include "arcops/formal_sum.hpp"
#include "arcops/partition.hpp"

namespace arcops {

// A Hochschild cochain of arity n is stored as a Multilinear with n+1
// single-axis slots; slot 0 is the output leg, slots 1..n the inputs:
// f(e_{i1}..e_{in}) = sum_k t[k, i1..in] e_k.
using Cochain = Multilinear;

Cochain cochain_zero(const GradedAlgebra& A, int arity);
Cochain cochain_of_element(const GradedAlgebra& A, const Vec& a); // arity 0
// apply to basis arguments
Vec apply_cochain(const GradedAlgebra& A, const Cochain& f,
                  const std::vector<int>& args);

// dualization and its inverse: f~(a_0..a_n) = <a_0, f(a_1..a_n)>
Multilinear cochain_to_cyclic(const GradedAlgebra& A, const Cochain& f);
Cochain cyclic_to_cochain(const GradedAlgebra& A, const Multilinear& phi);

// decoration tensor of a cochain: the element components placed on the
// marked angles (output leg kept, input legs raised by the Casimir); a
// single-slot form with arity+1 axes, axis 0 = the outside side
Multilinear cochain_to_decoration(const GradedAlgebra& A, const Cochain& f);
Cochain decoration_to_cochain(const GradedAlgebra& A, const Multilinear& D);

Cochain d_hoch(const GradedAlgebra& A, const Cochain& f);
Multilinear d_cyc(const GradedAlgebra& A, const Multilinear& phi);
// transpose of d_cyc under the coordinate pairing: probes of output slots
// are differentiated by this arity-lowering operator
Multilinear d_cyc_transpose(const GradedAlgebra& A, const Multilinear& phi);
Multilinear connes_B(const GradedAlgebra& A, const Multilinear& phi);
// kill entries with a unit in an input slot (the normalized subcomplex)
Cochain normalize_cochain(const GradedAlgebra& A, const Cochain& f);
Multilinear normalize_cyclic(const GradedAlgebra& A, const Multilinear& phi);

Cochain cup(const GradedAlgebra& A, const Cochain& f, const Cochain& g);
Cochain brace_i(const GradedAlgebra& A, const Cochain& f, int i,
                const Cochain& g);
Cochain brace(const GradedAlgebra& A, const Cochain& f, const Cochain& g);
Cochain bracket(const GradedAlgebra& A, const Cochain& f, const Cochain& g);
Cochain sqcup(const GradedAlgebra& A, const Cochain& f, const Cochain& g);
Cochain box_i(const GradedAlgebra& A, const Cochain& f, int i,
              const Cochain& g);

// tensor-word operations on the reduced tensor algebra
using Word = std::vector<int>;
std::string word_key(const Word& w);
std::string word_pair_key(const Word& u, const Word& v);
using WordPairSum = FormalSum<std::pair<Word, Word>>;
Word mu_word(const Word& u, const Word& v);
WordPairSum delta_word(const Word& w); // proper splits only
// lozenge: sum over (prefix, letter, suffix)
struct WordTriple {
  Word left;
  int mid;
  Word right;
};
FormalSum<WordTriple> lozenge_word(const Word& w);
std::string word_triple_key(const WordTriple& t);
// the widened product: concatenation through a middle letter
Word boxtimes_word(const Word& u, int mid, const Word& v);
// iterated deconcatenation into l+1 factors (proper splits)
using WordTuple = std::vector<Word>;
std::string word_tuple_key(const WordTuple& t);
FormalSum<WordTuple> delta_l_word(const Word& w, int l);
// iterated lozenge: words alternating with l single letters
struct LozengeTuple {
  std::vector<Word> words; // l+1 of them
  std::vector<int> mids;   // l of them
};
std::string lozenge_tuple_key(const LozengeTuple& t);
FormalSum<LozengeTuple> lozenge_l_word(const Word& w, int l);
// reversed multi-pairing eta^m
Rat eta_words(const GradedAlgebra& A, const Word& u, const Word& v);

// operation degree of a graph-induced operation: half the number of
// non-partitioning angles minus one (= underlying edges - 1)
int op_degree(const PartitionedArcGraph& p);

// normal form of a graph-induced operation with provenance
struct NormalForm {
  int degree_l = 0;
  std::vector<int> delta_counts; // per boundary
  std::vector<int> eta_powers;   // per underlying edge
  Multilinear reconstructed;
};
// tensor-correlator decomposition (eta powers = multiplicities)
NormalForm normal_form_tensor(const GradedAlgebra& A,
                              const PartitionedArcGraph& p);
// angle-correlator decomposition over a quasi-filling graph with the
// constant marking (polygon factors per underlying region, eta powers =
// multiplicities - 1)
NormalForm normal_form_angle(const GradedAlgebra& A,
                             const PartitionedArcGraph& p);

} // namespace arcops

#endif
