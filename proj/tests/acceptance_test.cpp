// Acceptance battery: runs every verification suite and prints one line per
// criterion.  All comparisons are exact rational equalities.
#include <cstdio>

#include "arcops/suites.hpp"

int main() {
  using namespace arcops;
  struct Criterion {
    int number;
    const char* label;
    const char* suite;
  };
  const Criterion criteria[] = {
      {1, "structural soundness", "structural"},
      {2, "duality round-trips and the partitioning duality", "duality"},
      {3, "partitioning operator is operadic", "p-morphism"},
      {4, "operad, PROP and modular axioms", "operad-axioms"},
      {5, "correlator compositionality", "correlator-compat"},
      {6, "dg compatibility of the correlators", "dg-compat"},
      {7, "cylinder cut independence and Euler factor", "cylinder"},
      {8, "tree-level operation recovery", "tree-level"},
      {9, "BV and cyclic identities", "bv-cyclic"},
      {10, "filtration, grading and normal forms", "filtration"},
      {11, "tensor-algebra identities and action", "tv-identities"},
      {12, "chain-level correlators on co-cycles", "chain-level"},
  };
  SuiteOptions opt;
  bool all_ok = true;
  for (const auto& cr : criteria) {
    SuiteReport rep = run_suite(cr.suite, opt);
    long long instances = 0;
    for (const auto& c : rep.checks) instances += c.instances;
    bool ok = rep.ok();
    all_ok &= ok;
    std::printf("criterion %2d %-48s %s (%lld instances)\n", cr.number,
                cr.label, ok ? "pass" : "FAIL", instances);
    if (!ok)
      for (const auto& c : rep.checks)
        if (!c.pass)
          std::printf("   %s: %s\n", c.name.c_str(),
                      c.counterexample.c_str());
  }
  return all_ok ? 0 : 1;
}
