#include "conjsense/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace conjsense {

namespace {

struct Level {
  std::vector<Weight> wts;
  RatMatrix gram;
  std::vector<std::pair<int, int>> created_by;  // (simple index, parent index in previous level)
};

}  // namespace

MatrixRep build_matrix_rep(const SimpleType& t, const Weight& lam, const Int& cap) {
  require_dominant(t, lam);
  const RootDatum& rd = root_datum(t);
  const int r = rd.rank();
  const Int expected_dim = weyl_dimension(t, lam);
  if (cap != 0 && expected_dim > cap)
    throw SpecError("build_matrix_rep: dimension " + expected_dim.str() +
                    " exceeds cap " + cap.str());

  std::vector<Level> levels;
  levels.push_back({{lam}, {{Rational(1)}}, {{-1, -1}}});

  // lower[i][n]: f_i from level n to level n+1; raise[i][n]: e_i from level
  // n to level n-1 (both in the chosen bases)
  std::vector<std::vector<RatMatrix>> lower(r), raise(r);
  for (int i = 0; i < r; ++i) raise[i].push_back(rat_zero_matrix(0, 1));

  while (true) {
    const std::size_t n = levels.size() - 1;
    const Level& cur = levels[n];
    const std::size_t sz = cur.wts.size();
    const std::size_t prev_sz = n == 0 ? 0 : levels[n - 1].wts.size();

    // M_j = gram * lower_j(prev level): <u, f_j z> for z in the previous level
    std::vector<RatMatrix> m(r);
    for (int j = 0; j < r; ++j)
      m[j] = n == 0 ? rat_zero_matrix(sz, 0) : rat_mul(cur.gram, lower[j][n - 1]);

    // candidate Shapovalov gram: H[(i,u)][(j,w)] =
    //   (M_j * raise_i)[u][w] + delta_ij * wt(w)[i] * gram[u][w]
    std::vector<std::vector<RatMatrix>> p(r, std::vector<RatMatrix>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        p[j][i] = prev_sz == 0 ? rat_zero_matrix(sz, sz) : rat_mul(m[j], raise[i][n]);

    struct Candidate {
      int i;
      int u;
      Weight wt;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < r; ++i)
      for (std::size_t u = 0; u < sz; ++u) {
        Weight w = cur.wts[u];
        for (int j = 0; j < r; ++j) w[j] -= rd.cartan()[i][j];
        cands.push_back({i, static_cast<int>(u), std::move(w)});
      }
    auto pair_gram = [&](const Candidate& x, const Candidate& y) -> Rational {
      if (x.wt != y.wt) return Rational(0);
      Rational v = p[y.i][x.i][x.u][y.u];
      if (x.i == y.i) v += Rational(cur.wts[y.u][x.i]) * cur.gram[x.u][y.u];
      return v;
    };

    // greedy independent subset per weight group, in deterministic order
    std::map<Weight, std::vector<int>> groups;
    for (std::size_t c = 0; c < cands.size(); ++c) groups[cands[c].wt].push_back(static_cast<int>(c));

    Level next;
    std::vector<RatVec> expansion(cands.size());  // over the selected of the same weight
    std::vector<int> selected_index(cands.size(), -1);
    std::vector<std::vector<int>> group_selected_of(cands.size());

    for (auto& [wt, members] : groups) {
      std::vector<int> selected;
      for (int c : members) {
        RatVec g(selected.size());
        for (std::size_t k = 0; k < selected.size(); ++k)
          g[k] = pair_gram(cands[selected[k]], cands[c]);
        Rational norm = pair_gram(cands[c], cands[c]);
        if (selected.empty()) {
          if (norm != 0) {
            selected_index[c] = static_cast<int>(next.wts.size());
            next.wts.push_back(wt);
            next.created_by.push_back({cands[c].i, cands[c].u});
            selected.push_back(c);
          } else {
            expansion[c] = {};
          }
          continue;
        }
        RatMatrix gsel = rat_zero_matrix(selected.size(), selected.size());
        for (std::size_t a = 0; a < selected.size(); ++a)
          for (std::size_t b = 0; b < selected.size(); ++b)
            gsel[a][b] = pair_gram(cands[selected[a]], cands[selected[b]]);
        RatVec coeff = rat_solve(std::move(gsel), g);
        Rational residual = norm;
        for (std::size_t k = 0; k < selected.size(); ++k) residual -= g[k] * coeff[k];
        if (residual != 0) {
          selected_index[c] = static_cast<int>(next.wts.size());
          next.wts.push_back(wt);
          next.created_by.push_back({cands[c].i, cands[c].u});
          selected.push_back(c);
        } else {
          expansion[c] = std::move(coeff);
        }
      }
      for (int c : members) group_selected_of[c] = selected;
    }

    if (next.wts.empty()) break;
    const std::size_t nsz = next.wts.size();

    next.gram = rat_zero_matrix(nsz, nsz);
    std::vector<int> cand_of_basis(nsz);
    for (std::size_t c = 0; c < cands.size(); ++c)
      if (selected_index[c] >= 0) cand_of_basis[selected_index[c]] = static_cast<int>(c);
    for (std::size_t a = 0; a < nsz; ++a)
      for (std::size_t b = 0; b < nsz; ++b)
        next.gram[a][b] = pair_gram(cands[cand_of_basis[a]], cands[cand_of_basis[b]]);

    for (int i = 0; i < r; ++i) {
      RatMatrix low = rat_zero_matrix(nsz, sz);
      for (std::size_t u = 0; u < sz; ++u) {
        const int c = static_cast<int>(i * sz + u);
        if (selected_index[c] >= 0) {
          low[selected_index[c]][u] = 1;
        } else {
          const auto& sel = group_selected_of[c];
          for (std::size_t k = 0; k < expansion[c].size(); ++k)
            low[selected_index[sel[k]]][u] = expansion[c][k];
        }
      }
      lower[i].push_back(std::move(low));
    }

    // e_i on a new basis vector f_j(w): f_j(e_i w) + delta_ij <wt(w), a_i^vee> w
    for (int i = 0; i < r; ++i) {
      RatMatrix ri = rat_zero_matrix(sz, nsz);
      for (std::size_t s = 0; s < nsz; ++s) {
        const auto [j, w] = next.created_by[s];
        if (n > 0) {
          for (std::size_t z = 0; z < prev_sz; ++z) {
            const Rational& coef = raise[i][n][z][w];
            if (coef == 0) continue;
            for (std::size_t target = 0; target < sz; ++target)
              if (lower[j][n - 1][target][z] != 0)
                ri[target][s] += coef * lower[j][n - 1][target][z];
          }
        }
        if (i == j) ri[w][s] += Rational(cur.wts[w][i]);
      }
      raise[i].push_back(std::move(ri));
    }

    levels.push_back(std::move(next));
  }

  MatrixRep rep;
  rep.type = t;
  rep.lambda = lam;
  std::vector<int> offset(levels.size() + 1, 0);
  for (std::size_t n = 0; n < levels.size(); ++n)
    offset[n + 1] = offset[n] + static_cast<int>(levels[n].wts.size());
  rep.dim = offset.back();
  if (Int(rep.dim) != expected_dim)
    throw SpecError("build_matrix_rep: constructed dimension " + std::to_string(rep.dim) +
                    " does not match the Weyl formula " + expected_dim.str());

  rep.weight_basis.reserve(rep.dim);
  rep.creation.reserve(rep.dim);
  for (std::size_t n = 0; n < levels.size(); ++n)
    for (std::size_t v = 0; v < levels[n].wts.size(); ++v) {
      rep.weight_basis.push_back(levels[n].wts[v]);
      auto [i, parent] = levels[n].created_by[v];
      rep.creation.push_back(i < 0 ? std::make_pair(-1, -1)
                                   : std::make_pair(i, offset[n - 1] + parent));
    }

  rep.raising.assign(r, rat_zero_matrix(rep.dim, rep.dim));
  rep.lowering.assign(r, rat_zero_matrix(rep.dim, rep.dim));
  for (int i = 0; i < r; ++i) {
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
      const RatMatrix& low = lower[i][n];
      for (std::size_t row = 0; row < low.size(); ++row)
        for (std::size_t col = 0; col < low[row].size(); ++col)
          if (low[row][col] != 0)
            rep.lowering[i][offset[n + 1] + row][offset[n] + col] = low[row][col];
    }
    for (std::size_t n = 1; n < levels.size(); ++n) {
      const RatMatrix& ri = raise[i][n];
      for (std::size_t row = 0; row < ri.size(); ++row)
        for (std::size_t col = 0; col < ri[row].size(); ++col)
          if (ri[row][col] != 0)
            rep.raising[i][offset[n - 1] + row][offset[n] + col] = ri[row][col];
    }
  }
  return rep;
}

bool check_commutation(const MatrixRep& rep) {
  const RootDatum& rd = root_datum(rep.type);
  const int r = rd.rank();
  const int d = rep.dim;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      RatMatrix ef = rat_mul(rep.raising[i], rep.lowering[j]);
      RatMatrix fe = rat_mul(rep.lowering[j], rep.raising[i]);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          Rational expect(0);
          if (i == j && a == b) expect = rep.weight_basis[a][i];
          if (ef[a][b] - fe[a][b] != expect) return false;
        }
      // [h_i, e_j] = <alpha_j, alpha_i^vee> e_j on every basis vector
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (rep.raising[j][a][b] != 0 &&
              rep.weight_basis[a][i] - rep.weight_basis[b][i] != rd.cartan()[j][i])
            return false;
    }
  }
  return true;
}

RatMatrix invariant_form(const MatrixRep& rep) {
  const RootDatum& rd = root_datum(rep.type);
  const int r = rd.rank();
  const int d = rep.dim;

  // unknowns: B[u][v] with wt(u) + wt(v) = 0
  std::map<std::pair<int, int>, int> unknown_index;
  std::vector<std::pair<int, int>> unknowns;
  auto neg = [](Weight w) {
    for (int& c : w) c = -c;
    return w;
  };
  std::map<Weight, std::vector<int>> by_weight;
  for (int v = 0; v < d; ++v) by_weight[rep.weight_basis[v]].push_back(v);
  for (int u = 0; u < d; ++u) {
    auto it = by_weight.find(neg(rep.weight_basis[u]));
    if (it == by_weight.end()) continue;
    for (int v : it->second) {
      unknown_index[{u, v}] = static_cast<int>(unknowns.size());
      unknowns.push_back({u, v});
    }
  }
  if (unknowns.empty()) return rat_zero_matrix(d, d);

  // rows: B(Xu, v) + B(u, Xv) = 0 for X = e_i, f_i, restricted to pairs
  // where some term can be nonzero
  std::vector<RatVec> rows;
  auto add_rows_for = [&](const RatMatrix& x) {
    for (int u = 0; u < d; ++u)
      for (int v = 0; v < d; ++v) {
        RatVec row(unknowns.size(), Rational(0));
        bool nontrivial = false;
        for (int w = 0; w < d; ++w) {
          if (x[w][u] != 0) {
            auto it = unknown_index.find({w, v});
            if (it != unknown_index.end()) {
              row[it->second] += x[w][u];
              nontrivial = true;
            }
          }
          if (x[w][v] != 0) {
            auto it = unknown_index.find({u, w});
            if (it != unknown_index.end()) {
              row[it->second] += x[w][v];
              nontrivial = true;
            }
          }
        }
        if (nontrivial) rows.push_back(std::move(row));
      }
  };
  for (int i = 0; i < r; ++i) {
    add_rows_for(rep.raising[i]);
    add_rows_for(rep.lowering[i]);
  }

  std::vector<RatVec> kernel;
  if (rows.empty()) {
    // no constraints (the trivial representation): the whole space solves
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      RatVec v(unknowns.size(), Rational(0));
      v[k] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = rat_kernel_basis(RatMatrix(rows.begin(), rows.end()));
  }
  if (kernel.empty()) return rat_zero_matrix(d, d);
  if (kernel.size() > 1)
    throw SpecError("invariant_form: solution space is not one-dimensional");

  RatMatrix b = rat_zero_matrix(d, d);
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    b[unknowns[k].first][unknowns[k].second] = kernel[0][k];
  return b;
}

Bilinear invariant_form_search(const MatrixRep& rep) {
  RatMatrix b = invariant_form(rep);
  bool zero = true, symmetric = true, alternating = true;
  for (int u = 0; u < rep.dim; ++u)
    for (int v = 0; v < rep.dim; ++v) {
      if (b[u][v] != 0) zero = false;
      if (b[u][v] != b[v][u]) symmetric = false;
      if (b[u][v] != -b[v][u]) alternating = false;
    }
  if (zero) return Bilinear::none;
  if (symmetric == alternating)
    throw SpecError("invariant_form_search: form is neither symmetric nor alternating");
  return symmetric ? Bilinear::orthogonal : Bilinear::symplectic;
}

int lifted_determinant(const MatrixRep& rep, const DiagramAutomorphism& theta) {
  if (theta.apply(rep.lambda) != rep.lambda)
    throw SpecError("lifted_determinant: automorphism does not fix the highest weight");
  RatMatrix b = invariant_form(rep);
  bool has_form = false;
  int bu = 0, bv = 0;
  for (int u = 0; u < rep.dim && !has_form; ++u)
    for (int v = 0; v < rep.dim && !has_form; ++v)
      if (b[u][v] != 0) {
        bu = u;
        bv = v;
        has_form = true;
      }
  if (!has_form) throw SpecError("lifted_determinant: representation is not self-dual");

  const int d = rep.dim;
  const auto& pi = theta.node_permutation;

  // intertwiner with T r(x) = r(theta x) T, built along the creation tree:
  // T(f_i parent) = f_{pi(i)} (T parent), T(top) = top
  RatMatrix t = rat_zero_matrix(d, d);
  t[0][0] = 1;
  for (int v = 1; v < d; ++v) {
    auto [i, parent] = rep.creation[v];
    const RatMatrix& f = rep.lowering[pi[i]];
    for (int row = 0; row < d; ++row) {
      Rational acc(0);
      for (int mid = 0; mid < d; ++mid)
        if (f[row][mid] != 0 && t[mid][parent] != 0) acc += f[row][mid] * t[mid][parent];
      t[row][v] = acc;
    }
  }

  // certify the intertwining relations on all generators
  for (int i = 0; i < static_cast<int>(pi.size()); ++i) {
    if (rat_mul(t, rep.lowering[i]) != rat_mul(rep.lowering[pi[i]], t))
      throw SpecError("lifted_determinant: intertwiner check failed (lowering)");
    if (rat_mul(t, rep.raising[i]) != rat_mul(rep.raising[pi[i]], t))
      throw SpecError("lifted_determinant: intertwiner check failed (raising)");
  }

  // scale into the orthogonal group: T^t B T = c B, det(T/sqrt(c)) = det(T)/c^(d/2)
  RatVec tu(d), tv(d);
  for (int row = 0; row < d; ++row) {
    tu[row] = t[row][bu];
    tv[row] = t[row][bv];
  }
  Rational c_num(0);
  for (int x = 0; x < d; ++x) {
    if (tu[x] == 0) continue;
    for (int y = 0; y < d; ++y)
      if (b[x][y] != 0 && tv[y] != 0) c_num += tu[x] * b[x][y] * tv[y];
  }
  Rational c = c_num / b[bu][bv];
  if (c == 0) throw SpecError("lifted_determinant: degenerate rescaling");

  Rational det = rat_determinant(t);
  Rational scale(1);
  if (d % 2 != 0) throw SpecError("lifted_determinant: odd-dimensional input");
  for (int k = 0; k < d / 2; ++k) scale *= c;
  Rational result = det / scale;
  if (result == 1) return 1;
  if (result == -1) return -1;
  throw SpecError("lifted_determinant: normalized determinant is not a sign");
}

EigenSampleReport eigenvalue_pm1_check(const std::vector<MatrixRep>& factors,
                                       int sample_count, std::uint64_t seed) {
  EigenSampleReport report;
  report.samples = sample_count;
  report.seed = seed;

  // weight 1 holds iff every factor carries the zero weight
  report.weight1 = true;
  for (const auto& f : factors) {
    bool zero = false;
    for (const auto& w : f.weight_basis)
      if (std::all_of(w.begin(), w.end(), [](int c) { return c == 0; })) zero = true;
    if (!zero) report.weight1 = false;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-12, 12);

  bool sound = true;
  for (int s = 0; s < sample_count; ++s) {
    // exact diagonal of rho(xi(q)): entry q^e per product basis vector,
    // e the pairing of the concatenated weight with the cocharacter; with
    // |q| >= 2 an eigenvalue +-1 occurs exactly when some e vanishes
    std::set<long long> sums{0};
    bool zero_from_nonzero_weight = false;
    std::vector<std::vector<long long>> factor_exponents;
    for (const auto& f : factors) {
      std::vector<int> xi(f.weight_basis[0].size());
      for (auto& x : xi) x = coord(rng);
      std::vector<long long> exps;
      for (const auto& w : f.weight_basis) {
        long long e = 0;
        for (std::size_t i = 0; i < w.size(); ++i) e += static_cast<long long>(w[i]) * xi[i];
        exps.push_back(e);
      }
      factor_exponents.push_back(std::move(exps));
    }
    // running partial sums across factors; track whether a zero total can
    // arise from a tuple that is not the all-zero weight
    std::set<std::pair<long long, bool>> partial{{0, false}};
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      std::set<std::pair<long long, bool>> nxt;
      for (const auto& [sum, nonzero] : partial)
        for (std::size_t v = 0; v < factor_exponents[fi].size(); ++v) {
          bool wt_zero = std::all_of(factors[fi].weight_basis[v].begin(),
                                     factors[fi].weight_basis[v].end(),
                                     [](int c) { return c == 0; });
          nxt.insert({sum + factor_exponents[fi][v], nonzero || !wt_zero});
        }
      partial = std::move(nxt);
    }
    bool has_eigen_one = false;
    for (const auto& [sum, nonzero] : partial)
      if (sum == 0) {
        has_eigen_one = true;
        if (nonzero) zero_from_nonzero_weight = true;
      }

    if (has_eigen_one) ++report.eigenvalue_one_hits;
    if (report.weight1) {
      // the zero weight forces eigenvalue 1 at every sample
      if (!has_eigen_one) sound = false;
    } else {
      if (has_eigen_one && !zero_from_nonzero_weight) sound = false;  // unexplained hit
      if (!has_eigen_one) ++report.generic_misses;
    }
  }
  if (!report.weight1 && report.generic_misses == 0) sound = false;
  report.passed = sound;
  return report;
}

}  // namespace conjsense
