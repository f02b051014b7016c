#pragma once

// The adjoint-representation specialization: per-type verdicts from the
// diagram signature rule, the product enumerator over even-rank factors,
// and closed-form dimensions for the mod-4 tests.

#include <string>
#include <vector>

#include "conjsense/conjugacy.hpp"
#include "conjsense/types.hpp"

namespace conjsense {

struct AdjointVerdict {
  SimpleType type;                // canonical
  bool even_rank = false;
  std::vector<int> diagram_signatures;  // one per diagram automorphism, identity included
  bool lfmo = false;
  bool canonicalized = false;     // input was rewritten (e.g. C2 -> B2)
};

// lfmo = even rank and every diagram automorphism has node signature +1.
AdjointVerdict classify_adjoint(const SimpleType& t);

// Closed-form adjoint dimension used by the product rule: for even rank
// A_2n: 4n(n+1), B_2n and C_2n: 2n(4n+1), D_2n: 2n(4n-1), E6: 78, E8: 248,
// F4: 52, G2: 14 (and the general formulas elsewhere).
Int adjoint_dimension_closed_form(const SimpleType& t);

// The three-case rule over a product of adjoint factors: exactly one
// even-rank factor (its type must classify as special), exactly two (not
// isomorphic, or dimension divisible by 4), or at least three.
ConjugacyReport classify_adjoint_product(const std::vector<SimpleType>& types);

// All even-rank canonical simple types with rank <= max_rank, ordered by
// rank then series letter.
std::vector<AdjointVerdict> enumerate_adjoint(int max_rank);

}  // namespace conjsense
