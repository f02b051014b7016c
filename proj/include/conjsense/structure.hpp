#pragma once

// Structure theory of possibly-reducible self-dual representations:
// constituent profiles, essentiality and the odd-orthogonal-constituent test.

#include <string>
#include <vector>

#include "conjsense/irrep.hpp"
#include "conjsense/types.hpp"

namespace conjsense {

enum class IsogenyTag { simply_connected, adjoint, unspecified };

struct GroupSpec {
  std::vector<SimpleType> factors;
  int torus_rank = 0;
  IsogenyTag tag = IsogenyTag::unspecified;

  auto operator<=>(const GroupSpec&) const = default;
};

std::string to_string(const GroupSpec& g);

// One irreducible tensor factorization: a highest weight per simple factor
// (the torus acts trivially on everything in scope).
struct FactorizedIrrep {
  std::vector<Weight> per_factor;

  auto operator<=>(const FactorizedIrrep&) const = default;
};

// A summand of the representation. Non-self-dual constituents are only
// accepted as polarized pairs sigma + sigma^vee, entered with the flag set;
// such a summand contributes twice the constituent dimension.
struct Summand {
  FactorizedIrrep irrep;
  int multiplicity = 1;
  bool polarized_pair = false;

  auto operator<=>(const Summand&) const = default;
};

struct SelfDualRepSpec {
  std::vector<Summand> summands;

  auto operator<=>(const SelfDualRepSpec&) const = default;
};

enum class TotalBilinear { orthogonal, symplectic, mixed_none };

struct StructureReport {
  Int total_dim;
  bool all_self_dual = false;
  bool essential = false;
  bool has_odd_orthogonal_constituent = false;
  TotalBilinear total_bilinear = TotalBilinear::mixed_none;
};

// Shape checks: factor counts match, weights dominant, multiplicities >= 1,
// summands pairwise distinct, polarized pairs genuinely non-self-dual and
// plain summands self-dual. Throws SpecError with a diagnostic.
void validate(const GroupSpec& g, const SelfDualRepSpec& rho);

// dim = product of factor dims; self-dual iff every factor is; symplectic
// iff an odd number of factors are symplectic; zero weight iff every factor
// has zero weight.
IrrepProfile profile_constituent(const GroupSpec& g, const FactorizedIrrep& f);

StructureReport analyze_structure(const GroupSpec& g, const SelfDualRepSpec& rho);

// Canonicalize the factor types (C2 -> B2, D3 -> A3, D2 splitting, ...),
// transporting every summand's weights along the node relabelings. Torus
// rank and isogeny tag pass through unchanged.
std::pair<GroupSpec, SelfDualRepSpec> canonicalize_spec(const GroupSpec& g,
                                                        const SelfDualRepSpec& rho,
                                                        std::vector<std::string>* notes);

}  // namespace conjsense
