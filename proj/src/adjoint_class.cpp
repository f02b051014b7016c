#include "conjsense/adjoint_class.hpp"

#include <algorithm>

#include "conjsense/root_datum.hpp"

namespace conjsense {

AdjointVerdict classify_adjoint(const SimpleType& t) {
  Canonicalization c = canonicalize(t);
  if (c.factors.size() != 1)
    throw SpecError("classify_adjoint: " + to_string(t) + " is not simple after "
                    "canonicalization");
  AdjointVerdict v;
  v.type = c.factors[0].type;
  v.canonicalized = c.changed;
  v.even_rank = v.type.rank % 2 == 0;
  bool all_plus = true;
  for (const auto& d : diagram_automorphisms(v.type)) {
    v.diagram_signatures.push_back(d.signature);
    if (d.signature < 0) all_plus = false;
  }
  v.lfmo = v.even_rank && all_plus;
  return v;
}

Int adjoint_dimension_closed_form(const SimpleType& t) {
  const Int n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 2);
    case Series::B:
    case Series::C: return n * (2 * n + 1);
    case Series::D: return n * (2 * n - 1);
    case Series::E: return t.rank == 6 ? 78 : t.rank == 7 ? 133 : 248;
    case Series::F: return 52;
    case Series::G: return 14;
  }
  throw SpecError("adjoint_dimension_closed_form: bad series");
}

ConjugacyReport classify_adjoint_product(const std::vector<SimpleType>& types) {
  if (types.empty()) throw SpecError("classify_adjoint_product: empty factor list");
  std::vector<SimpleType> canon;
  for (const auto& t : types) {
    Canonicalization c = canonicalize(t);
    for (const auto& f : c.factors) canon.push_back(f.type);
  }

  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < canon.size(); ++i)
    if (canon[i].rank % 2 == 0) even.push_back(i);
  if (even.empty())
    throw SpecError("classify_adjoint_product: no even-rank factor, total dimension is odd");

  ConjugacyReport rep;
  rep.weight1 = true;  // every adjoint carries the zero weight
  rep.essential = true;
  rep.condition_B = false;
  rep.m = 2;
  rep.reasons.push_back({"weight-one-factorwise", "adjoint factors all carry the zero weight"});
  rep.reasons.push_back({"multiplicity-m", "m = 2: weight 1 holds, no odd orthogonal "
                                           "constituent"});

  bool special;
  if (even.size() == 1) {
    AdjointVerdict v = classify_adjoint(canon[even[0]]);
    special = v.lfmo;
    rep.reasons.push_back({"adjoint-node-signature",
                           "one even-rank factor " + to_string(v.type) +
                               (special ? ": all diagram signatures +1"
                                        : ": a diagram automorphism has signature -1")});
  } else if (even.size() == 2) {
    const SimpleType a = canon[even[0]];
    const SimpleType b = canon[even[1]];
    if (a != b) {
      special = true;
      rep.reasons.push_back({"swap-parity-mod4",
                             "two even-rank factors of different type: no odd swap"});
    } else {
      Int dim = adjoint_dimension_closed_form(a);
      special = dim % 4 == 0;
      rep.reasons.push_back({"swap-parity-mod4",
                             "isomorphic even-rank factors " + to_string(a) + " of dimension " +
                                 dim.str() +
                                 (special ? " = 0 mod 4: the swap is even"
                                          : " = 2 mod 4: the swap lifts with determinant -1")});
    }
  } else {
    special = true;
    rep.reasons.push_back({"three-even-factors",
                           "at least three even-rank factors: every liftable automorphism "
                           "is even"});
  }

  rep.condition_C_fails = special ? Verdict::yes : Verdict::no;
  rep.lfmo = rep.condition_C_fails;
  rep.m_prime_two = rep.condition_C_fails;
  rep.reasons.push_back({"image-conjugacy-count",
                         std::string("m' = ") + (special ? "2" : "1")});
  return rep;
}

std::vector<AdjointVerdict> enumerate_adjoint(int max_rank) {
  if (max_rank < 2) throw SpecError("enumerate_adjoint: max_rank must be >= 2");
  std::vector<AdjointVerdict> out;
  for (int rank = 2; rank <= max_rank; rank += 2) {
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F,
                     Series::G}) {
      SimpleType t{s, rank};
      if (!is_valid_canonical(t)) continue;
      out.push_back(classify_adjoint(t));
    }
  }
  return out;
}

}  // namespace conjsense
