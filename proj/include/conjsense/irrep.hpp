#pragma once

// Per-simple-factor analytics of a highest-weight irreducible: dimension,
// self-duality, orthogonal/symplectic type, zero-weight membership and
// exact weight multiplicities (Freudenthal).

#include <map>
#include <vector>

#include "conjsense/root_datum.hpp"
#include "conjsense/types.hpp"

namespace conjsense {

enum class Bilinear { orthogonal, symplectic, none };

struct IrrepProfile {
  Int dim;
  bool self_dual = false;
  Bilinear bilinear = Bilinear::none;
  bool has_zero_weight = false;
};

void require_dominant(const SimpleType& t, const Weight& lam);

// Product over positive roots of <lam+rho, alpha^vee> / <rho, alpha^vee>,
// in exact integer arithmetic (no overflow possible).
Int weyl_dimension(const SimpleType& t, const Weight& lam);

// theta(lam) == lam for the -w0 involution of the type.
bool is_self_dual(const SimpleType& t, const Weight& lam);

// Orthogonal iff <lam, 2 rho^vee> is even; requires a self-dual input.
Bilinear fs_type(const SimpleType& t, const Weight& lam);

// Root-lattice membership; by saturation of the weight set this is
// equivalent to the zero weight having positive multiplicity.
bool has_zero_weight(const SimpleType& t, const Weight& lam);

IrrepProfile irrep_profile(const SimpleType& t, const Weight& lam);

// Dominant weights of the irreducible with their exact multiplicities.
struct WeightTable {
  SimpleType type;
  Weight lambda;
  std::map<Weight, Int> dominant_multiplicities;

  // Multiplicity of an arbitrary weight (reflected to its dominant
  // representative first); zero when off the weight diagram.
  Int multiplicity(const Weight& mu) const;

  // Sum of multiplicities over all Weyl-orbit expansions.
  Int total_dimension() const;
};

// Refuses when weyl_dimension exceeds dim_cap (cap 0 = unlimited).
WeightTable freudenthal_table(const SimpleType& t, const Weight& lam, const Int& dim_cap);

Int freudenthal_multiplicity(const SimpleType& t, const Weight& lam, const Weight& mu,
                             const Int& dim_cap);

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant);
Int orbit_size(const RootDatum& rd, const Weight& dominant);

// All dominant weights with weyl_dimension <= max_dim, deterministic order.
std::vector<Weight> enumerate_dominant_weights(const SimpleType& t, const Int& max_dim);

}  // namespace conjsense
