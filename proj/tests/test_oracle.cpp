#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "conjsense/oracle.hpp"

using namespace conjsense;

TEST_CASE("A1 three-dimensional representation: Cartan spectrum and relations") {
  MatrixRep rep = build_matrix_rep({Series::A, 1}, {2}, 0);
  CHECK(rep.dim == 3);
  std::vector<int> eigen;
  for (const auto& w : rep.weight_basis) eigen.push_back(w[0]);
  std::sort(eigen.begin(), eigen.end());
  CHECK(eigen == std::vector<int>{-2, 0, 2});
  CHECK(check_commutation(rep));
}

TEST_CASE("B2 adjoint: 10x10 with a two-dimensional Cartan kernel") {
  MatrixRep rep =
      build_matrix_rep({Series::B, 2}, root_datum({Series::B, 2}).highest_root(), 0);
  CHECK(rep.dim == 10);
  int zero_count = 0;
  for (const auto& w : rep.weight_basis)
    if (w == Weight{0, 0}) ++zero_count;
  CHECK(zero_count == 2);
  CHECK(check_commutation(rep));
}

TEST_CASE("A2 adjoint is 8-dimensional and passes the commutation checks") {
  MatrixRep rep =
      build_matrix_rep({Series::A, 2}, root_datum({Series::A, 2}).highest_root(), 0);
  CHECK(rep.dim == 8);
  CHECK(check_commutation(rep));
}

TEST_CASE("cap refusal") {
  CHECK_THROWS_AS(build_matrix_rep({Series::B, 2}, {2, 2}, 10), SpecError);
}

TEST_CASE("Cartan spectra equal the Freudenthal weight multiset") {
  for (const auto& t : std::vector<SimpleType>{{Series::A, 2}, {Series::B, 2},
                                               {Series::G, 2}}) {
    for (const auto& lam : enumerate_dominant_weights(t, 40)) {
      MatrixRep rep = build_matrix_rep(t, lam, 40);
      WeightTable table = freudenthal_table(t, lam, 40);
      std::map<Weight, Int> from_matrix;
      for (const auto& w : rep.weight_basis) ++from_matrix[w];
      Int total = 0;
      for (const auto& [w, mult] : from_matrix) {
        CHECK(table.multiplicity(w) == mult);
        total += mult;
      }
      CHECK(total == weyl_dimension(t, lam));
    }
  }
}

TEST_CASE("invariant form search: pinned examples") {
  CHECK(invariant_form_search(build_matrix_rep({Series::A, 1}, {1}, 0)) ==
        Bilinear::symplectic);
  CHECK(invariant_form_search(build_matrix_rep(
            {Series::A, 2}, root_datum({Series::A, 2}).highest_root(), 0)) ==
        Bilinear::orthogonal);
  CHECK(invariant_form_search(build_matrix_rep({Series::A, 2}, {1, 0}, 0)) ==
        Bilinear::none);
  CHECK(invariant_form_search(build_matrix_rep({Series::B, 2}, {0, 1}, 0)) ==
        Bilinear::symplectic);
}

TEST_CASE("lifted determinants on adjoints match the node signatures") {
  auto adjoint_det = [](const SimpleType& t) {
    MatrixRep rep = build_matrix_rep(t, root_datum(t).highest_root(), 0);
    int result = 0;
    for (const auto& theta : diagram_automorphisms(t)) {
      if (theta.is_identity()) continue;
      result = lifted_determinant(rep, theta);
    }
    return result;
  };
  CHECK(adjoint_det({Series::A, 2}) == -1);
  CHECK(adjoint_det({Series::A, 4}) == 1);
}

TEST_CASE("lifted determinant rejects automorphisms that move the weight") {
  MatrixRep rep = build_matrix_rep({Series::A, 2}, {1, 0}, 0);
  auto autos = diagram_automorphisms({Series::A, 2});
  for (const auto& theta : autos)
    if (!theta.is_identity()) CHECK_THROWS_AS(lifted_determinant(rep, theta), SpecError);
}

TEST_CASE("eigenvalue sampling bridge on the three pinned cases") {
  MatrixRep b2 =
      build_matrix_rep({Series::B, 2}, root_datum({Series::B, 2}).highest_root(), 0);
  EigenSampleReport r1 = eigenvalue_pm1_check({b2}, 100, 20240401);
  CHECK(r1.passed);
  CHECK(r1.weight1);
  CHECK(r1.eigenvalue_one_hits == 100);

  MatrixRep a1 = build_matrix_rep({Series::A, 1}, {1}, 0);
  EigenSampleReport r2 = eigenvalue_pm1_check({a1, a1}, 100, 20240401);
  CHECK(r2.passed);
  CHECK_FALSE(r2.weight1);
  CHECK(r2.generic_misses > 0);

  MatrixRep a1sq = build_matrix_rep({Series::A, 1}, {2}, 0);
  EigenSampleReport r3 = eigenvalue_pm1_check({a1sq}, 100, 20240401);
  CHECK(r3.passed);
  CHECK(r3.weight1);
}
