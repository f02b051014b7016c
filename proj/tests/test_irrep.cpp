#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conjsense/irrep.hpp"

using namespace conjsense;

TEST_CASE("Weyl dimensions: pinned examples") {
  CHECK(weyl_dimension({Series::A, 1}, {1}) == 2);
  CHECK(weyl_dimension({Series::A, 1}, {2}) == 3);
  CHECK(weyl_dimension({Series::B, 2}, root_datum({Series::B, 2}).highest_root()) == 10);
  CHECK(weyl_dimension({Series::F, 4}, root_datum({Series::F, 4}).highest_root()) == 52);
  CHECK(weyl_dimension({Series::B, 2}, {1, 0}) == 5);
  CHECK(weyl_dimension({Series::B, 2}, {0, 1}) == 4);
  CHECK(weyl_dimension({Series::A, 2}, {1, 0}) == 3);
  CHECK(weyl_dimension({Series::A, 2}, {1, 1}) == 8);
  CHECK(weyl_dimension({Series::B, 3}, {1, 0, 0}) == 7);
  CHECK(weyl_dimension({Series::E, 8}, root_datum({Series::E, 8}).highest_root()) == 248);
  CHECK_THROWS_AS(weyl_dimension({Series::A, 2}, {-1, 0}), SpecError);
}

TEST_CASE("self-duality by the -w0 involution") {
  CHECK_FALSE(is_self_dual({Series::A, 2}, {1, 0}));
  CHECK(is_self_dual({Series::A, 2}, {1, 1}));
  CHECK(is_self_dual({Series::B, 3}, {0, 1, 2}));  // any B-type weight
  CHECK(is_self_dual({Series::A, 1}, {5}));
  CHECK(is_self_dual({Series::D, 4}, {1, 0, 0, 0}));
  CHECK_FALSE(is_self_dual({Series::D, 5}, {0, 0, 0, 1, 0}));  // half-spin of D_odd
  CHECK_FALSE(is_self_dual({Series::E, 6}, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("self-duality agrees with negation closure of the weight multiset") {
  // oracle for the hard-coded involution: the full weight multiset must be
  // closed under negation exactly when the involution fixes lambda
  for (const auto& t : std::vector<SimpleType>{{Series::A, 2}, {Series::A, 3},
                                               {Series::B, 2}, {Series::D, 4},
                                               {Series::G, 2}}) {
    for (const auto& lam : enumerate_dominant_weights(t, 120)) {
      WeightTable table = freudenthal_table(t, lam, 120);
      bool closed = true;
      for (const auto& [mu, mult] : table.dominant_multiplicities) {
        Weight neg(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
        if (table.multiplicity(neg) != mult) closed = false;
      }
      CHECK_MESSAGE(closed == is_self_dual(t, lam), to_string(t));
    }
  }
}

TEST_CASE("Frobenius-Schur parity: pinned examples") {
  CHECK(fs_type({Series::A, 1}, {1}) == Bilinear::symplectic);
  CHECK(fs_type({Series::A, 1}, {2}) == Bilinear::orthogonal);
  CHECK(fs_type({Series::B, 2}, root_datum({Series::B, 2}).highest_root()) ==
        Bilinear::orthogonal);
  CHECK(fs_type({Series::B, 2}, {0, 1}) == Bilinear::symplectic);  // 4-dim spin
  CHECK(fs_type({Series::B, 3}, {0, 0, 1}) == Bilinear::orthogonal);  // 8-dim spin
  CHECK(fs_type({Series::C, 3}, {1, 0, 0}) == Bilinear::symplectic);
  CHECK_THROWS_AS(fs_type({Series::A, 2}, {1, 0}), SpecError);
}

TEST_CASE("adjoint is orthogonal for every type up to rank 8") {
  for (int r = 1; r <= 8; ++r)
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F,
                     Series::G}) {
      SimpleType t{s, r};
      if (!is_valid_canonical(t)) continue;
      CHECK(fs_type(t, root_datum(t).highest_root()) == Bilinear::orthogonal);
    }
}

TEST_CASE("zero weight membership") {
  CHECK(has_zero_weight({Series::B, 2}, root_datum({Series::B, 2}).highest_root()));
  CHECK_FALSE(has_zero_weight({Series::A, 1}, {1}));
  CHECK(has_zero_weight({Series::A, 1}, {2}));
  CHECK_FALSE(has_zero_weight({Series::A, 2}, {1, 0}));
  CHECK(has_zero_weight({Series::G, 2}, {1, 0}));  // 7-dim fundamental
}

TEST_CASE("Freudenthal multiplicities: pinned examples") {
  CHECK(freudenthal_multiplicity({Series::A, 1}, {2}, {0}, 0) == 1);
  CHECK(freudenthal_multiplicity({Series::A, 2}, {1, 1}, {0, 0}, 0) == 2);
  CHECK(freudenthal_multiplicity({Series::B, 2}, root_datum({Series::B, 2}).highest_root(),
                                 {0, 0}, 0) == 2);
  CHECK(freudenthal_multiplicity({Series::A, 2}, {1, 0}, {0, 0}, 0) == 0);
  // cap refusal
  CHECK_THROWS_AS(freudenthal_table({Series::B, 2}, {3, 3}, 10), SpecError);
}

TEST_CASE("multiplicity totals equal the Weyl dimension (small sweep)") {
  for (const auto& t : std::vector<SimpleType>{{Series::A, 2}, {Series::B, 2},
                                               {Series::C, 3}, {Series::G, 2}}) {
    for (const auto& lam : enumerate_dominant_weights(t, 200)) {
      WeightTable table = freudenthal_table(t, lam, 200);
      CHECK(table.total_dimension() == weyl_dimension(t, lam));
      CHECK((table.multiplicity(Weight(t.rank, 0)) > 0) == has_zero_weight(t, lam));
    }
  }
}

TEST_CASE("B2 adjoint weight table sums to 10 with zero multiplicity 2") {
  WeightTable table =
      freudenthal_table({Series::B, 2}, root_datum({Series::B, 2}).highest_root(), 0);
  CHECK(table.total_dimension() == 10);
  CHECK(table.multiplicity({0, 0}) == 2);
}

TEST_CASE("orbit sizes multiply out") {
  const RootDatum& a2 = root_datum({Series::A, 2});
  CHECK(orbit_size(a2, {1, 1}) == 6);
  CHECK(orbit_size(a2, {1, 0}) == 3);
  CHECK(orbit_size(a2, {0, 0}) == 1);
  const RootDatum& b2 = root_datum({Series::B, 2});
  CHECK(orbit_size(b2, {1, 1}) == 8);  // regular orbit = Weyl group order
}

TEST_CASE("enumerate_dominant_weights respects the cap and is sorted") {
  auto weights = enumerate_dominant_weights({Series::A, 2}, 10);
  CHECK(std::is_sorted(weights.begin(), weights.end()));
  for (const auto& lam : weights) CHECK(weyl_dimension({Series::A, 2}, lam) <= 10);
  // dims 1, 3, 3, 6, 6, 8, 10, 10 for (0,0), (1,0), (0,1), (2,0), (0,2),
  // (1,1), (3,0), (0,3)
  CHECK(weights.size() == 8);
}
