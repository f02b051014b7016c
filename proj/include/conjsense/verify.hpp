#pragma once

// Invariant suites behind `verify` and the acceptance gate: closed-form
// signature tables, dimension formulas, formula-vs-oracle equivalences,
// isogeny invariance and the eigenvalue sampling bridge.

#include <string>
#include <vector>

#include "conjsense/conjugacy.hpp"

namespace conjsense {

struct SuiteResult {
  std::string suite;
  int checked = 0;
  int failed = 0;
  int skipped = 0;  // cap exhaustion is reported as skipped, not failed
  std::vector<std::string> failures;

  bool passed() const { return failed == 0; }
};

// Diagram automorphism groups and signatures for every even-rank type up
// to max_rank against the closed rule (A_2n: (-1)^n; B/C/E8/F4/G2 trivial;
// D: contains -1, with the triality group at rank 4; E6: +1).
SuiteResult verify_table1_rule(int max_rank);

// Lifted-determinant oracle vs the node-signature rule on adjoint
// representations (A2, A4, A6, D4 with all six automorphisms and
// multiplicativity, D6, E6).
SuiteResult verify_signature_oracle(const DecisionOptions& opts);

// Both of the above (the `verify table1` suite).
SuiteResult verify_table1(const DecisionOptions& opts);

// Weyl-formula adjoint dimensions vs the closed forms, and the
// rank + 2|Phi+| identity, for all types up to rank 12.
SuiteResult verify_dims();

// Parity-formula Frobenius-Schur type vs the explicit invariant-form
// search on every self-dual irrep of dimension <= 60 over ranks <= 3,
// plus none <=> not self-dual.
SuiteResult verify_fs(const DecisionOptions& opts);

// Reports byte-identical across isogeny tags and added trivial torus
// factors for randomized queries (seeded).
SuiteResult verify_isogeny(int query_count, std::uint64_t seed);

// The sampling bridge on the three pinned cases, 100 seeded samples each.
SuiteResult verify_eigen(std::uint64_t seed);

// Freudenthal totals vs the Weyl dimension and zero-weight membership vs
// multiplicity(0) > 0 for all dominant weights with dim <= max_dim over
// all canonical types of rank <= max_rank.
SuiteResult verify_weights(int max_rank, const Int& max_dim);

}  // namespace conjsense
