#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "conjsense/structure.hpp"

using namespace conjsense;

namespace {

GroupSpec group(std::vector<SimpleType> factors) {
  GroupSpec g;
  g.factors = std::move(factors);
  return g;
}

Summand summand(std::vector<Weight> weights, int mult = 1, bool pair = false) {
  Summand s;
  s.irrep.per_factor = std::move(weights);
  s.multiplicity = mult;
  s.polarized_pair = pair;
  return s;
}

}  // namespace

TEST_CASE("profile_constituent: pinned examples") {
  // std5 x std7 of B2xB3
  GroupSpec g = group({{Series::B, 2}, {Series::B, 3}});
  IrrepProfile p = profile_constituent(g, {{Weight{1, 0}, Weight{1, 0, 0}}});
  CHECK(p.dim == 35);
  CHECK(p.bilinear == Bilinear::orthogonal);
  CHECK(p.has_zero_weight);

  // symplectic x symplectic = orthogonal, no zero weight
  GroupSpec a11 = group({{Series::A, 1}, {Series::A, 1}});
  IrrepProfile q = profile_constituent(a11, {{Weight{1}, Weight{1}}});
  CHECK(q.dim == 4);
  CHECK(q.bilinear == Bilinear::orthogonal);
  CHECK_FALSE(q.has_zero_weight);

  GroupSpec b2 = group({{Series::B, 2}});
  IrrepProfile adj = profile_constituent(b2, {{root_datum({Series::B, 2}).highest_root()}});
  CHECK(adj.dim == 10);
  CHECK(adj.bilinear == Bilinear::orthogonal);
  CHECK(adj.has_zero_weight);

  CHECK_THROWS_AS(profile_constituent(b2, {{Weight{1, 0}, Weight{1, 0}}}), SpecError);
}

TEST_CASE("analyze_structure: essentiality and the odd-orthogonal flag") {
  GroupSpec b2 = group({{Series::B, 2}});
  Weight adj = root_datum({Series::B, 2}).highest_root();

  StructureReport doubled = analyze_structure(b2, {{summand({adj}, 2)}});
  CHECK_FALSE(doubled.essential);
  CHECK(doubled.total_dim == 20);

  StructureReport single = analyze_structure(b2, {{summand({adj})}});
  CHECK(single.essential);
  CHECK_FALSE(single.has_odd_orthogonal_constituent);
  CHECK(single.total_bilinear == TotalBilinear::orthogonal);

  GroupSpec b2b3 = group({{Series::B, 2}, {Series::B, 3}});
  StructureReport two = analyze_structure(
      b2b3, {{summand({Weight{1, 0}, Weight{0, 0, 0}}),
              summand({Weight{0, 0}, Weight{1, 0, 0}})}});
  CHECK(two.essential);
  CHECK(two.has_odd_orthogonal_constituent);
  CHECK(two.total_dim == 12);
}

TEST_CASE("total bilinear classification") {
  GroupSpec a1 = group({{Series::A, 1}});
  CHECK(analyze_structure(a1, {{summand({Weight{1}})}}).total_bilinear ==
        TotalBilinear::symplectic);
  // a symplectic summand with even multiplicity admits an orthogonal total
  CHECK(analyze_structure(a1, {{summand({Weight{1}}, 2)}}).total_bilinear ==
        TotalBilinear::orthogonal);
  // mixing an odd symplectic with an odd orthogonal admits neither
  CHECK(analyze_structure(a1, {{summand({Weight{1}}), summand({Weight{2}})}})
            .total_bilinear == TotalBilinear::mixed_none);
}

TEST_CASE("polarized pairs") {
  GroupSpec a2 = group({{Series::A, 2}});
  SelfDualRepSpec rho{{summand({Weight{1, 0}}, 1, true)}};
  StructureReport s = analyze_structure(a2, rho);
  CHECK(s.total_dim == 6);
  CHECK_FALSE(s.all_self_dual);
  CHECK_FALSE(s.essential);
  CHECK_FALSE(s.has_odd_orthogonal_constituent);
  CHECK(s.total_bilinear == TotalBilinear::orthogonal);

  // plain non-self-dual summand is rejected, as is a pair of a self-dual one
  CHECK_THROWS_AS(analyze_structure(a2, {{summand({Weight{1, 0}})}}), SpecError);
  CHECK_THROWS_AS(analyze_structure(a2, {{summand({Weight{1, 1}}, 1, true)}}), SpecError);
}

TEST_CASE("validation rejects malformed specs") {
  GroupSpec b2 = group({{Series::B, 2}});
  Weight adj = root_datum({Series::B, 2}).highest_root();
  CHECK_THROWS_AS(analyze_structure(b2, {{summand({adj}, 0)}}), SpecError);
  CHECK_THROWS_AS(analyze_structure(b2, {{summand({adj}), summand({adj})}}), SpecError);
  CHECK_THROWS_AS(analyze_structure(b2, {{}}), SpecError);
  GroupSpec torus;
  torus.torus_rank = 1;
  CHECK_THROWS_AS(analyze_structure(torus, {{summand({})}}), SpecError);
}

TEST_CASE("randomized: essential iff multiplicity-free and all self-dual; "
          "total_dim additivity; monotone odd-orthogonal flag") {
  std::mt19937_64 rng(7);
  GroupSpec g = group({{Series::A, 2}, {Series::B, 2}});
  const std::vector<Weight> a2_weights = {{0, 0}, {1, 1}, {2, 2}};
  const std::vector<Weight> b2_weights = {{0, 0}, {1, 0}, {0, 1}, {0, 2}};
  for (int trial = 0; trial < 200; ++trial) {
    SelfDualRepSpec rho;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      Summand s = summand({a2_weights[rng() % a2_weights.size()],
                           b2_weights[rng() % b2_weights.size()]},
                          1 + static_cast<int>(rng() % 2));
      rho.summands.push_back(std::move(s));
    }
    StructureReport full;
    try {
      full = analyze_structure(g, rho);
    } catch (const SpecError&) {
      continue;  // duplicate summands or a symplectic piece entered plainly
    }
    bool expect_essential = true;
    Int expect_dim = 0;
    bool expect_odd_orth = false;
    for (const auto& s : rho.summands) {
      IrrepProfile p = profile_constituent(g, s.irrep);
      if (s.multiplicity != 1 || !p.self_dual) expect_essential = false;
      expect_dim += p.dim * s.multiplicity;
      if (p.bilinear == Bilinear::orthogonal && p.dim % 2 != 0) expect_odd_orth = true;
    }
    CHECK(full.essential == expect_essential);
    CHECK(full.total_dim == expect_dim);
    CHECK(full.has_odd_orthogonal_constituent == expect_odd_orth);

    // monotone under adding a summand
    if (full.has_odd_orthogonal_constituent) {
      SelfDualRepSpec extended = rho;
      Summand extra = summand({Weight{1, 1}, Weight{0, 2}});
      bool duplicate = false;
      for (const auto& s : extended.summands)
        if (s.irrep == extra.irrep) duplicate = true;
      if (!duplicate) {
        extended.summands.push_back(extra);
        CHECK(analyze_structure(g, extended).has_odd_orthogonal_constituent);
      }
    }
  }
}
