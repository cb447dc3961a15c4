#include "arcops/tensor.hpp"

#include <stdexcept>

#include "arcops/sign.hpp"

namespace arcops {

Multilinear Multilinear::zeros(int dim, std::vector<int> slots) {
  Multilinear m;
  m.dim = dim;
  m.slots = std::move(slots);
  m.data.assign(size_of(dim, m.slots), Rat(0));
  return m;
}

Rat& Multilinear::at(const std::vector<int>& idx) {
  long long off = 0;
  for (int i : idx) off = off * dim + i;
  return data[off];
}
const Rat& Multilinear::at(const std::vector<int>& idx) const {
  long long off = 0;
  for (int i : idx) off = off * dim + i;
  return data[off];
}

Multilinear operator+(const Multilinear& a, const Multilinear& b) {
  if (a.slots != b.slots || a.dim != b.dim)
    throw std::invalid_argument("multilinear shape mismatch");
  Multilinear r = a;
  for (size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
  return r;
}
Multilinear operator-(const Multilinear& a, const Multilinear& b) {
  if (a.slots != b.slots || a.dim != b.dim)
    throw std::invalid_argument("multilinear shape mismatch");
  Multilinear r = a;
  for (size_t i = 0; i < r.data.size(); ++i) r.data[i] -= b.data[i];
  return r;
}

Rat Multilinear::contract_all(const std::vector<Vec>& words) const {
  if ((int)words.size() != total_axes())
    throw std::invalid_argument("contract_all: word count mismatch");
  Rat out(0);
  IndexIter it(dim, total_axes());
  if (it.done) return data.empty() ? Rat(0) : data[0];
  do {
    Rat term = at(it.idx);
    if (!term.is_zero()) {
      for (int a = 0; a < (int)it.idx.size() && !term.is_zero(); ++a)
        term *= words[a][it.idx[a]];
      out += term;
    }
  } while (it.next());
  return out;
}

Multilinear compose_correlators(const Multilinear& phi, int i,
                                const Multilinear& psi, const Mat& casimir,
                                const std::vector<int>& degrees,
                                SlotPairing pairing) {
  int P = (int)phi.slots.size(), Q = (int)psi.slots.size();
  if (i < 1 || i >= P) throw std::invalid_argument("compose: slot out of range");
  std::vector<int> rslots;
  for (int t = 0; t < i; ++t) rslots.push_back(phi.slots[t]);
  for (int t = 1; t < Q; ++t) rslots.push_back(psi.slots[t]);
  for (int t = i + 1; t < P; ++t) rslots.push_back(phi.slots[t]);
  Multilinear out = Multilinear::zeros(phi.dim, rslots);
  (void)degrees;
  int c = phi.slots[i];
  if (psi.slots[0] != c) return out; // length mismatch pairs to zero

  // axis offsets
  auto offsets = [](const std::vector<int>& slots) {
    std::vector<int> off(slots.size() + 1, 0);
    for (size_t t = 0; t < slots.size(); ++t) off[t + 1] = off[t] + slots[t];
    return off;
  };
  std::vector<int> poff = offsets(phi.slots), qoff = offsets(psi.slots),
                   roff = offsets(rslots);

  const int dim = phi.dim;
  IndexIter rit(dim, out.total_axes());
  std::vector<int> pidx(phi.total_axes()), qidx(psi.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !rit.done) {
    first = false;
    // distribute result indices to phi/psi argument positions
    {
      int r = 0;
      for (int t = 0; t < i; ++t)
        for (int a = 0; a < phi.slots[t]; ++a) pidx[poff[t] + a] = rit.idx[r++];
      for (int t = 1; t < Q; ++t)
        for (int a = 0; a < psi.slots[t]; ++a) qidx[qoff[t] + a] = rit.idx[r++];
      for (int t = i + 1; t < P; ++t)
        for (int a = 0; a < phi.slots[t]; ++a) pidx[poff[t] + a] = rit.idx[r++];
    }
    Rat acc(0);
    // sum over Casimir insertions; the partner axis follows the pairing
    auto partner = [&](int t) {
      return pairing == SlotPairing::reversed ? c - 1 - t : (c - t) % c;
    };
    IndexIter cit(dim, 2 * c);
    bool cfirst = c == 0;
    while (cfirst || !cit.done) {
      cfirst = false;
      Rat w(1);
      for (int t = 0; t < c && !w.is_zero(); ++t) {
        int u = cit.idx[2 * t], v = cit.idx[2 * t + 1];
        w *= casimir[u][v];
        pidx[poff[i] + t] = u;
        qidx[qoff[0] + partner(t)] = v;
      }
      if (!w.is_zero()) {
        // the composition formula is literal: the values multiply as
        // scalars, no reordering sign enters (the degrees parameter is kept
        // for the slot-permutation action)
        acc += phi.at(pidx) * psi.at(qidx) * w;
      }
      if (c == 0) break;
      cit.next();
    }
    if (!acc.is_zero()) out.at(rit.idx) += acc;
    if (out.total_axes() == 0) break;
    rit.next();
  }
  return out;
}

Multilinear permute_slots(const Multilinear& phi, const std::vector<int>& perm,
                          const std::vector<int>& degrees) {
  std::vector<int> rslots(phi.slots.size());
  for (size_t t = 0; t < perm.size(); ++t) rslots[t] = phi.slots[perm[t]];
  Multilinear out = Multilinear::zeros(phi.dim, rslots);
  auto offsets = [](const std::vector<int>& slots) {
    std::vector<int> off(slots.size() + 1, 0);
    for (size_t t = 0; t < slots.size(); ++t) off[t + 1] = off[t] + slots[t];
    return off;
  };
  std::vector<int> roff = offsets(rslots), poff = offsets(phi.slots);
  IndexIter it(phi.dim, out.total_axes());
  std::vector<int> pidx(phi.total_axes());
  bool first = out.total_axes() == 0;
  while (first || !it.done) {
    first = false;
    for (size_t t = 0; t < perm.size(); ++t)
      for (int a = 0; a < rslots[t]; ++a)
        pidx[poff[perm[t]] + a] = it.idx[roff[t] + a];
    Rat v = phi.at(pidx);
    if (!v.is_zero()) {
      // Koszul sign of reordering the slot decorations
      std::vector<int> degs, target;
      // symbols are the phi argument positions in phi order
      std::vector<int> sym_deg(phi.total_axes());
      for (size_t t = 0; t < perm.size(); ++t)
        for (int a = 0; a < rslots[t]; ++a)
          sym_deg[poff[perm[t]] + a] = degrees[it.idx[roff[t] + a]];
      std::vector<int> tgt;
      for (size_t t = 0; t < perm.size(); ++t)
        for (int a = 0; a < rslots[t]; ++a) tgt.push_back(poff[perm[t]] + a);
      v *= Rat(koszul_sign(sym_deg, tgt));
      out.at(it.idx) = v;
    }
    if (out.total_axes() == 0) break;
    it.next();
  }
  return out;
}

} // namespace arcops
