#ifndef ARCOPS_FORMAL_SUM_HPP
#define ARCOPS_FORMAL_SUM_HPP

#include <map>
#include <string>
#include <vector>

#include "arcops/rational.hpp"

namespace arcops {

// Formal linear combination of canonical terms.  Terms are keyed by a
// canonical structure string; zero coefficients are dropped eagerly.
template <typename T>
struct FormalSum {
  struct Term {
    T value;
    Rat coeff;
  };
  std::map<std::string, Term> terms;

  void add(const std::string& key, const T& value, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, Term{value, c});
    } else {
      it->second.coeff += c;
      if (it->second.coeff.is_zero()) terms.erase(it);
    }
  }
  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, t] : o.terms) add(k, t.value, t.coeff);
    return *this;
  }
  FormalSum& operator*=(const Rat& c) {
    if (c.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [k, t] : terms) t.coeff *= c;
    return *this;
  }
  friend FormalSum operator-(const FormalSum& a, const FormalSum& b) {
    FormalSum r = a;
    for (const auto& [k, t] : b.terms) r.add(k, t.value, -t.coeff);
    return r;
  }
  bool is_zero() const { return terms.empty(); }
  size_t size() const { return terms.size(); }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [k, t] : a.terms) {
      auto it = b.terms.find(k);
      if (it == b.terms.end() || it->second.coeff != t.coeff) return false;
    }
    return true;
  }
  // true if a == s*b for the given sign
  bool equals_up_to_sign(const FormalSum& o, int sign) const {
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [k, t] : terms) {
      auto it = o.terms.find(k);
      if (it == o.terms.end() || t.coeff != it->second.coeff * Rat(sign))
        return false;
    }
    return true;
  }
};

} // namespace arcops

#endif
