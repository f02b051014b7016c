#pragma once

// Desk-scale brute-force verification: explicit exact-rational matrix
// irreps built from the highest-weight vector by lowering-operator spans,
// invariant-form search, determinants of lifted diagram automorphisms, and
// the eigenvalue +-1 sampling bridge. Exact rational arithmetic throughout.

#include <cstdint>
#include <utility>
#include <vector>

#include "conjsense/irrep.hpp"
#include "conjsense/root_datum.hpp"
#include "conjsense/types.hpp"

namespace conjsense {

struct MatrixRep {
  SimpleType type;
  Weight lambda;
  int dim = 0;
  std::vector<Weight> weight_basis;           // Cartan eigenvalue tuples per basis vector
  std::vector<std::pair<int, int>> creation;  // basis vector b = f_i(parent); (-1,-1) at top
  std::vector<RatMatrix> raising;             // e_i, dim x dim
  std::vector<RatMatrix> lowering;            // f_i
};

inline constexpr long kDefaultOracleCap = 600;

// Builds the irreducible action on a weight basis; refuses above the cap
// (cap 0 = unlimited). Asserts the dimension against the Weyl formula.
MatrixRep build_matrix_rep(const SimpleType& t, const Weight& lam, const Int& cap);

// Commutation sanity on the explicit matrices: Cartan diagonality is by
// construction; checks [e_i, f_j] = delta_ij h_i and [h_i, e_j] = <a_j, a_i^vee> e_j.
bool check_commutation(const MatrixRep& r);

// Solves B(Xu,v) + B(u,Xv) = 0 over all generators; the solution space is
// at most one-dimensional. Empty solution space -> none.
Bilinear invariant_form_search(const MatrixRep& r);

// The invariant form itself (zero matrix when none exists).
RatMatrix invariant_form(const MatrixRep& r);

// Determinant of the orthogonally normalized intertwiner between r and
// r twisted by theta. Requires theta to fix lambda and r self-dual.
// The intertwiner is constructed explicitly and certified by checking the
// intertwining relations, then rescaled into the orthogonal group.
int lifted_determinant(const MatrixRep& r, const DiagramAutomorphism& theta);

struct EigenSampleReport {
  bool passed = false;
  bool weight1 = false;
  int samples = 0;
  int eigenvalue_one_hits = 0;  // samples whose torus element has eigenvalue 1
  int generic_misses = 0;       // samples with no eigenvalue +-1 (expected when weight1 fails)
  std::uint64_t seed = 0;
};

// Random integer cocharacter points on the product torus; checks that the
// presence of eigenvalue +-1 in the sampled exact diagonal matrices matches
// the zero-weight prediction, and that every accidental hit is explained by
// a nonzero weight pairing to zero.
EigenSampleReport eigenvalue_pm1_check(const std::vector<MatrixRep>& factors,
                                       int sample_count, std::uint64_t seed);

}  // namespace conjsense
