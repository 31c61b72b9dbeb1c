#pragma once

#include <string>
#include <vector>

#include "nilgraph/algebra.hpp"
#include "nilgraph/graph.hpp"

namespace nilgraph {

struct CheckResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;  // set on failure or when not applicable
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failures() const;
};

// skew_symmetry, two_step, jz_identity, j_linearity, oracle_equivalence,
// center_direct, dimension_bookkeeping.
VerifyReport verify_algebra(const NilAlgebra& a);

// verify_algebra plus the graph-conditioned statements:
// odd_vertex_single_label, script_a_containment, script_a_at_most_one,
// proper_coloring, uniform_identities, xi_basis, j_via_action,
// alpha_inverse. Checks whose hypotheses fail are reported not applicable.
VerifyReport verify_graph(const LabeledDigraph& g);

}  // namespace nilgraph
