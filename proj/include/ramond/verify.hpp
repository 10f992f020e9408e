#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramond/algebra.hpp"
#include "ramond/bmodule.hpp"

namespace ramond {

struct CheckFailure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::string subject;  // algebra or module name
  std::map<std::string, std::string> params;
  long cases_checked = 0;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  void fail(const std::string& case_id, const std::string& expected, const std::string& actual);
  std::string to_json() const;   // machine-parseable, deterministic
  std::string summary() const;   // one-line human summary
};

Report suite_jacobi(const AlgebraSpec& alg, long bound);

// Lemma 3.1: given L_k V = 0 for k > t within the window, G_m V = 0 for
// m in (t, t+window].
Report suite_lemma31(const BModule& module, int t, int window, int label_cap);

// Lemma 3.2(i)/(ii) and Lemma 3.3(a)/(b) over all SVectors with W <= cap.
Report suite_lemma32_33(const BModule& module, int r, long weight_cap, int label_cap);

// Theorem 3.4 probes on seeded random nonzero elements.
Report suite_theorem34(const BModule& module, int r, int trials, long weight_cap,
                       unsigned seed, int label_cap);

// Theorem 4.2: M_{b-1} empty, M_b = the 1 (x) V slice, closure under B.
Report suite_theorem42(const BModule& module, int b, long weight_cap, int window,
                       int label_cap);

// Exact solve of the rescaling-constants system for the even-index
// subalgebra of R against the NS relations. Informational.
Report search_ns_embedding(long index_bound);

}  // namespace ramond
