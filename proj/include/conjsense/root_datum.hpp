#pragma once

// Exact root data for the simple types: Cartan matrix, positive roots with
// coroot coordinates, the doubled dual Weyl vector, root-lattice membership
// and the diagram automorphism group.

#include <vector>

#include "conjsense/numeric.hpp"
#include "conjsense/smith.hpp"
#include "conjsense/types.hpp"

namespace conjsense {

struct PositiveRoot {
  std::vector<int> root_coords;    // coefficients over the simple roots
  std::vector<int> coroot_coords;  // coefficients of the coroot over simple coroots
  std::vector<int> weight_coords;  // pairings <alpha, alpha_j^vee>
  int height = 0;                  // sum of root_coords
  int dual_height = 0;             // sum of coroot_coords = <rho, alpha^vee>
};

class RootDatum {
 public:
  // Requires a canonical type; throws SpecError otherwise.
  explicit RootDatum(SimpleType t);

  const SimpleType& type() const { return type_; }
  int rank() const { return rank_; }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in
  // fundamental-weight coordinates.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  // Height-graded, then lexicographic by coordinates.
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }

  // Coefficients of 2 rho^vee (sum of positive coroots) in the coroot basis.
  const std::vector<int>& rho_check_doubled() const { return rho_check_doubled_; }

  // Fundamental-weight coordinates of the highest root (the adjoint weight).
  const Weight& highest_root() const { return highest_root_; }

  Int adjoint_dimension() const;  // rank + 2 |Phi+|

  // <mu, alpha^vee> for a weight in fundamental coordinates.
  Int pair_coroot(const Weight& mu, const PositiveRoot& alpha) const;

  bool in_root_lattice(const Weight& mu) const;

  // Symmetric W-invariant form on weight coordinates, scaled to integers:
  // (mu, nu) = mu^T gram nu / gram_denominator.
  const std::vector<std::vector<Int>>& weight_gram_scaled() const { return gram_scaled_; }
  const Int& gram_denominator() const { return gram_den_; }
  Int form_scaled(const Weight& a, const Weight& b) const;

  Weight simple_root_weight_coords(int i) const;
  Weight reflect(int i, Weight mu) const;  // simple reflection s_i
  bool is_dominant(const Weight& mu) const;
  Weight dominant_representative(Weight mu) const;

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_d_;  // (alpha_i, alpha_i) = 2 d_i after integer scaling
  std::vector<PositiveRoot> positive_roots_;
  std::vector<int> rho_check_doubled_;
  Weight highest_root_;
  SmithForm root_lattice_;
  std::vector<std::vector<Int>> gram_scaled_;
  Int gram_den_;
};

// Cached, immutable after construction; safe for concurrent reads.
const RootDatum& root_datum(const SimpleType& t);

// Cartan matrix of a canonical simple type (also used standalone).
std::vector<std::vector<int>> cartan_matrix(const SimpleType& t);

// The full Dynkin diagram automorphism group (identity included), found by
// backtracking over Cartan-preserving node permutations. Order 1, 2, or 6.
std::vector<DiagramAutomorphism> diagram_automorphisms(const SimpleType& t);

// The -w0 involution deciding self-duality: identity except for A_n (n>=2),
// D_odd and E6, where it is the diagram flip.
DiagramAutomorphism dual_involution(const SimpleType& t);

}  // namespace conjsense
