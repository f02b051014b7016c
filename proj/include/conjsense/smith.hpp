#pragma once

// Smith normal form over the integers, used to decide root-lattice
// membership of weights (solvability of an integer linear system).

#include <vector>

#include "conjsense/numeric.hpp"

namespace conjsense {

using IntMatrix = std::vector<std::vector<Int>>;

// Invariant-factor decomposition u * m * v = d with u, v unimodular and d
// diagonal (diagonal entries may be zero for rank-deficient m).
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<Int> diag;

  // True iff m*x = b has an integer solution.
  bool solvable(const std::vector<Int>& b) const;
};

SmithForm smith_form(IntMatrix m);

}  // namespace conjsense
