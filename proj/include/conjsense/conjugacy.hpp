#pragma once

// The decision core: the weight-1 criterion, the odd-orthogonal global
// test, liftable-automorphism parity calculus and the final special/not
// verdict with multiplicities m and m'.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conjsense/oracle.hpp"
#include "conjsense/structure.hpp"

namespace conjsense {

enum class Parity { even, odd, neutral, undecided };
enum class Verdict { yes, no, undecided };

std::string to_string(Parity p);
std::string to_string(Verdict v);

struct Reason {
  std::string rule;  // stable machine-readable rule tag
  std::string text;

  std::string render() const { return text + " [rule:" + rule + "]"; }
};

struct ConjugacyReport {
  bool weight1 = false;
  bool essential = false;
  bool condition_B = false;
  Verdict condition_C_fails = Verdict::undecided;
  int m = 1;                             // 1 or 2
  Verdict m_prime_two = Verdict::undecided;  // yes -> m' = 2, no -> m' = 1
  Verdict lfmo = Verdict::undecided;
  std::vector<Reason> reasons;

  bool has_undecided() const {
    return lfmo == Verdict::undecided || m_prime_two == Verdict::undecided ||
           condition_C_fails == Verdict::undecided;
  }
};

struct DecisionOptions {
  long cap = kDefaultOracleCap;
  bool oracle = true;
  std::uint64_t seed = 0;
};

// Some summand has the zero weight; factorized summands have it iff every
// factor does.
bool condition_A_weight1(const GroupSpec& g, const SelfDualRepSpec& rho);

// Requires an orthogonal even-dimensional total; true iff some constituent
// is odd-dimensional of orthogonal type.
bool condition_B_global(const GroupSpec& g, const SelfDualRepSpec& rho);

// Diagram automorphisms fixing the highest weight (identity included);
// inner automorphisms are liftable and even without computation, so only
// diagram representatives are enumerated.
std::vector<DiagramAutomorphism> factor_liftable_outer_autos(const SimpleType& t,
                                                             const Weight& lam);

// A generator of the liftable automorphism group of an irreducible
// factorized representation: a factorwise diagram automorphism fixing its
// weight, or a swap of two factors of identical type whose weights are
// related by the stored diagram identification.
struct AutoGenerator {
  enum class Kind { type1L, type2L };
  Kind kind;
  int factor_i = 0;
  int factor_j = 0;          // type2L only
  DiagramAutomorphism theta;  // the factor automorphism / the identification
};

std::vector<AutoGenerator> liftable_generators(const GroupSpec& g, const FactorizedIrrep& f);

// Parity of one generator's lift on the whole representation, composing
// the factor-level parity with the other factors' dimension parities.
Parity generator_total_parity(const GroupSpec& g, const FactorizedIrrep& f,
                              const AutoGenerator& gen, const DecisionOptions& opts);

// Parity of a factorwise generator on one self-dual factor: neutral for odd
// dimension, the node signature for the adjoint weight, otherwise the
// oracle determinant when the dimension is within the cap.
Parity parity_of_type1L(const SimpleType& t, const Weight& lam,
                        const DiagramAutomorphism& theta, const DecisionOptions& opts);

// Parity of a swap of two factors carrying equivalent irreps, by the
// dimension of the swapped factor mod 4 and the other factors' dimensions.
Parity parity_of_type2L(const Int& dim_i, bool any_other_even_dim, bool all_others_odd_dim);

// Same canonical type and weights related by a diagram automorphism.
bool quasi_equivalent(const SimpleType& t1, const Weight& lam1, const SimpleType& t2,
                      const Weight& lam2);

// Canonicalizes factor types (transporting weights), drops the central
// torus (it acts trivially on everything in scope) and fixes the isogeny
// tag to the adjoint form. All downstream answers are invariant under this.
std::pair<GroupSpec, SelfDualRepSpec> isogeny_normalize(const GroupSpec& g,
                                                        const SelfDualRepSpec& rho,
                                                        std::vector<std::string>* notes);

// Verdict for a single irreducible tensor-factorized summand. Requires a
// self-dual orthogonal even-dimensional input.
ConjugacyReport decide_lfmo_irreducible(const GroupSpec& g, const FactorizedIrrep& f,
                                        const DecisionOptions& opts);

// General (possibly reducible) verdict; sound three-valued rules for the
// automorphism-lift condition, never a wrong yes or no.
ConjugacyReport decide_reducible(const GroupSpec& g, const SelfDualRepSpec& rho,
                                 const DecisionOptions& opts);

struct AnalysisOutcome {
  GroupSpec group;      // normalized form the analysis ran on
  SelfDualRepSpec rep;  // transported rep
  StructureReport structure;
  ConjugacyReport report;
  std::vector<std::string> notes;
};

// Full pipeline: normalize, structure checks (rejects odd total dimension
// and non-orthogonal totals), then the conjugacy decisions.
AnalysisOutcome analyze(const GroupSpec& g, const SelfDualRepSpec& rho,
                        const DecisionOptions& opts);

}  // namespace conjsense
