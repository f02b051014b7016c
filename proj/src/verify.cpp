#include "conjsense/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "conjsense/adjoint_class.hpp"
#include "conjsense/query.hpp"
#include "conjsense/report.hpp"

namespace conjsense {

namespace {

void fail(SuiteResult& r, const std::string& detail) {
  ++r.failed;
  r.failures.push_back(detail);
}

std::vector<SimpleType> canonical_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int rank = 1; rank <= max_rank; ++rank)
    for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F,
                     Series::G}) {
      SimpleType t{s, rank};
      if (is_valid_canonical(t)) out.push_back(t);
    }
  return out;
}

}  // namespace

SuiteResult verify_table1_rule(int max_rank) {
  SuiteResult r{"table1-rule", 0, 0, 0, {}};
  for (const auto& t : canonical_types_up_to(max_rank)) {
    if (t.rank % 2 != 0) continue;
    ++r.checked;
    auto autos = diagram_automorphisms(t);
    std::vector<int> sigs;
    for (const auto& a : autos) sigs.push_back(a.signature);
    std::sort(sigs.begin(), sigs.end());

    std::vector<int> expected;
    switch (t.series) {
      case Series::A: {
        // flip signature (-1)^n for rank 2n
        int n = t.rank / 2;
        expected = {n % 2 == 0 ? 1 : -1, 1};
        break;
      }
      case Series::B:
      case Series::C:
      case Series::F:
      case Series::G:
        expected = {1};
        break;
      case Series::E:
        expected = t.rank == 6 ? std::vector<int>{1, 1} : std::vector<int>{1};
        break;
      case Series::D:
        // rank 4 carries the full triality group: identity, three
        // transpositions, two 3-cycles
        expected = t.rank == 4 ? std::vector<int>{-1, -1, -1, 1, 1, 1}
                               : std::vector<int>{-1, 1};
        break;
    }
    std::sort(expected.begin(), expected.end());
    if (sigs != expected)
      fail(r, to_string(t) + ": signature multiset does not match the closed rule");
    bool has_minus = std::any_of(sigs.begin(), sigs.end(), [](int s) { return s < 0; });
    if (t.series == Series::D && !has_minus)
      fail(r, to_string(t) + ": D-type group must contain a signature -1");
  }
  return r;
}

SuiteResult verify_signature_oracle(const DecisionOptions& opts) {
  SuiteResult r{"table1-oracle", 0, 0, 0, {}};
  const std::vector<SimpleType> cases = {{Series::A, 2}, {Series::A, 4}, {Series::A, 6},
                                         {Series::D, 4}, {Series::D, 6}, {Series::E, 6}};
  for (const auto& t : cases) {
    const RootDatum& rd = root_datum(t);
    if (!opts.oracle || (opts.cap != 0 && rd.adjoint_dimension() > opts.cap)) {
      ++r.skipped;
      continue;
    }
    MatrixRep rep = build_matrix_rep(t, rd.highest_root(), Int(opts.cap));
    auto autos = diagram_automorphisms(t);
    std::vector<int> dets;
    for (const auto& theta : autos) {
      ++r.checked;
      int det = lifted_determinant(rep, theta);
      dets.push_back(det);
      if (det != theta.signature)
        fail(r, to_string(t) + ": lifted determinant " + std::to_string(det) +
                    " vs node signature " + std::to_string(theta.signature));
    }
    // multiplicativity across all composable pairs
    for (std::size_t a = 0; a < autos.size(); ++a)
      for (std::size_t b = 0; b < autos.size(); ++b) {
        ++r.checked;
        DiagramAutomorphism ab = autos[a].compose(autos[b]);
        int det_ab = lifted_determinant(rep, ab);
        if (det_ab != dets[a] * dets[b])
          fail(r, to_string(t) + ": determinant not multiplicative under composition");
      }
  }
  return r;
}

SuiteResult verify_table1(const DecisionOptions& opts) {
  SuiteResult rule = verify_table1_rule(12);
  SuiteResult oracle = verify_signature_oracle(opts);
  SuiteResult out{"table1", rule.checked + oracle.checked, rule.failed + oracle.failed,
                  rule.skipped + oracle.skipped, {}};
  out.failures = rule.failures;
  out.failures.insert(out.failures.end(), oracle.failures.begin(), oracle.failures.end());
  return out;
}

SuiteResult verify_dims() {
  SuiteResult r{"dims", 0, 0, 0, {}};
  for (const auto& t : canonical_types_up_to(12)) {
    ++r.checked;
    const RootDatum& rd = root_datum(t);
    Int weyl = weyl_dimension(t, rd.highest_root());
    Int closed = adjoint_dimension_closed_form(t);
    if (weyl != closed)
      fail(r, to_string(t) + ": Weyl formula " + weyl.str() + " vs closed form " +
                  closed.str());
    if (rd.adjoint_dimension() != weyl)
      fail(r, to_string(t) + ": rank + 2|Phi+| does not match the Weyl formula");
    bool even_dim = weyl % 2 == 0;
    if (even_dim != (t.rank % 2 == 0))
      fail(r, to_string(t) + ": adjoint dimension parity must match rank parity");
  }
  return r;
}

SuiteResult verify_fs(const DecisionOptions& opts) {
  SuiteResult r{"fs", 0, 0, 0, {}};
  for (const auto& t : canonical_types_up_to(3)) {
    for (const auto& lam : enumerate_dominant_weights(t, 60)) {
      if (!opts.oracle) {
        ++r.skipped;
        continue;
      }
      ++r.checked;
      MatrixRep rep = build_matrix_rep(t, lam, 60);
      Bilinear oracle = invariant_form_search(rep);
      if (is_self_dual(t, lam)) {
        Bilinear formula = fs_type(t, lam);
        if (oracle != formula) fail(r, to_string(t) + ": formula vs form search mismatch");
      } else if (oracle != Bilinear::none) {
        fail(r, to_string(t) + ": form found on a non-self-dual representation");
      }
    }
  }
  return r;
}

SuiteResult verify_isogeny(int query_count, std::uint64_t seed) {
  SuiteResult r{"isogeny", 0, 0, 0, {}};
  std::mt19937_64 rng(seed);
  const std::vector<SimpleType> pool = {
      {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2},
      {Series::B, 3}, {Series::C, 3}, {Series::D, 4}, {Series::G, 2}, {Series::F, 4}};

  auto random_self_dual_weight = [&](const SimpleType& t) {
    Weight w(t.rank);
    for (int& c : w) c = static_cast<int>(rng() % 2);
    Weight theta = dual_involution(t).apply(w);
    for (int i = 0; i < t.rank; ++i) w[i] += theta[i];  // force self-duality
    return w;
  };

  DecisionOptions opts;
  opts.oracle = false;  // undecided values compare fine; keeps the suite fast
  RunOptions render_opts;
  render_opts.format = ReportFormat::structured;
  render_opts.oracle = false;

  for (int q = 0; q < query_count; ++q) {
    GroupSpec g;
    int nfactors = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nfactors; ++i) g.factors.push_back(pool[rng() % pool.size()]);

    SelfDualRepSpec rho;
    bool adjoint = rng() % 2 == 0;
    Summand s;
    for (const auto& t : g.factors)
      s.irrep.per_factor.push_back(adjoint ? root_datum(t).highest_root()
                                           : random_self_dual_weight(t));
    s.multiplicity = 1 + static_cast<int>(rng() % 2);
    rho.summands.push_back(std::move(s));

    auto run = [&](IsogenyTag tag, int torus) -> std::string {
      GroupSpec gg = g;
      gg.tag = tag;
      gg.torus_rank = torus;
      QuerySpec qs;
      try {
        AnalysisOutcome out = analyze(gg, rho, opts);
        qs.group = out.group;
        qs.rep = out.rep;
        return render_analysis(qs, out, render_opts);
      } catch (const SpecError& e) {
        return std::string("rejected: ") + e.what();
      }
    };

    ++r.checked;
    std::string base = run(IsogenyTag::simply_connected, 0);
    for (const auto& variant : {run(IsogenyTag::adjoint, 0), run(IsogenyTag::unspecified, 0),
                                run(IsogenyTag::simply_connected, 1),
                                run(IsogenyTag::adjoint, 2)}) {
      if (variant != base) {
        fail(r, "query " + std::to_string(q) + ": report differs across isogeny variants");
        break;
      }
    }
  }
  return r;
}

SuiteResult verify_eigen(std::uint64_t seed) {
  SuiteResult r{"eigen", 0, 0, 0, {}};
  const int samples = 100;

  auto check = [&](const std::string& name, const std::vector<MatrixRep>& factors) {
    ++r.checked;
    EigenSampleReport rep = eigenvalue_pm1_check(factors, samples, seed);
    if (!rep.passed) fail(r, name + ": eigenvalue sampling bridge failed");
  };

  check("B2 adjoint",
        {build_matrix_rep({Series::B, 2}, root_datum({Series::B, 2}).highest_root(), 0)});
  check("A1xA1 [1]*[1]", {build_matrix_rep({Series::A, 1}, {1}, 0),
                          build_matrix_rep({Series::A, 1}, {1}, 0)});
  check("A1 [2]", {build_matrix_rep({Series::A, 1}, {2}, 0)});
  return r;
}

SuiteResult verify_weights(int max_rank, const Int& max_dim) {
  SuiteResult r{"weights", 0, 0, 0, {}};
  for (const auto& t : canonical_types_up_to(max_rank)) {
    for (const auto& lam : enumerate_dominant_weights(t, max_dim)) {
      ++r.checked;
      Int dim = weyl_dimension(t, lam);
      WeightTable table = freudenthal_table(t, lam, max_dim);
      if (table.total_dimension() != dim)
        fail(r, to_string(t) + ": multiplicity total does not match the Weyl dimension");
      Weight zero(t.rank, 0);
      bool mult_positive = table.multiplicity(zero) > 0;
      if (mult_positive != has_zero_weight(t, lam))
        fail(r, to_string(t) + ": zero-weight membership vs multiplicity(0) mismatch");
      // the hard-coded -w0 involution vs negation closure of the multiset
      bool closed = true;
      for (const auto& [mu, mult] : table.dominant_multiplicities) {
        Weight neg(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
        if (table.multiplicity(neg) != mult) closed = false;
      }
      if (closed != is_self_dual(t, lam))
        fail(r, to_string(t) + ": negation closure vs the duality involution");
    }
  }
  return r;
}

}  // namespace conjsense
