#ifndef ARCOPS_TENSOR_HPP
#define ARCOPS_TENSOR_HPP

#include <vector>

#include "arcops/algebra.hpp"

namespace arcops {

// Dense exact-rational multilinear form on tensor powers of the algebra.
// Slots are ordered; a slot with k axes accepts a length-k tensor word (a
// word of another length pairs to zero).  Axis order inside each slot and
// the slot order itself are part of the contract: slot order follows the
// boundary labels of the originating graph.
struct Multilinear {
  int dim = 0;
  std::vector<int> slots; // axes per slot
  std::vector<Rat> data;

  int total_axes() const {
    int t = 0;
    for (int s : slots) t += s;
    return t;
  }
  static long long size_of(int dim, const std::vector<int>& slots) {
    long long n = 1;
    for (int s : slots)
      for (int i = 0; i < s; ++i) n *= dim;
    return n;
  }
  static Multilinear zeros(int dim, std::vector<int> slots);

  Rat& at(const std::vector<int>& idx);
  const Rat& at(const std::vector<int>& idx) const;

  bool is_zero() const {
    for (const Rat& r : data)
      if (!r.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Multilinear& a, const Multilinear& b) {
    return a.dim == b.dim && a.slots == b.slots && a.data == b.data;
  }
  Multilinear& operator*=(const Rat& c) {
    for (Rat& r : data) r *= c;
    return *this;
  }
  friend Multilinear operator+(const Multilinear& a, const Multilinear& b);
  friend Multilinear operator-(const Multilinear& a, const Multilinear& b);

  // contract every axis against the given words (one Vec per axis, in axis
  // order) to a scalar
  Rat contract_all(const std::vector<Vec>& words) const;
};

// iterate over all index assignments
struct IndexIter {
  std::vector<int> idx;
  int dim;
  bool done = false;
  IndexIter(int dim_, int axes) : idx(axes, 0), dim(dim_) { done = axes < 0; }
  bool next() {
    for (int i = (int)idx.size() - 1; i >= 0; --i) {
      if (++idx[i] < dim) return true;
      idx[i] = 0;
    }
    done = true;
    return false;
  }
};

// Axis pairing of a contracted word slot: plain tensor words pair fully
// reversed (t <-> c-1-t); cyclic-cochain slots pair their first axes (the
// outside decorations) and reverse the rest (t <-> (c-t) mod c).
enum class SlotPairing { reversed, cyclic };

// The Casimir composition of correlation functions: plug C = sum eta_inv
// into slot i of phi (1-based, slot 0 is never substituted) and slot 0 of
// psi, contracting word slots in the given pairing order.  degrees supplies
// the basis degrees for the Koszul sign (all-even degrees give plain signs).
Multilinear compose_correlators(const Multilinear& phi, int i,
                                const Multilinear& psi, const Mat& casimir,
                                const std::vector<int>& degrees,
                                SlotPairing pairing = SlotPairing::reversed);

// permutation action on slots: result slot t = phi slot perm[t], with the
// Koszul sign of the reordering of the decorations
Multilinear permute_slots(const Multilinear& phi, const std::vector<int>& perm,
                          const std::vector<int>& degrees);

} // namespace arcops

#endif
