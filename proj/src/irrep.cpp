#include "conjsense/irrep.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace conjsense {

void require_dominant(const SimpleType& t, const Weight& lam) {
  if (static_cast<int>(lam.size()) != t.rank)
    throw SpecError("weight has " + std::to_string(lam.size()) + " coordinates, type " +
                    to_string(t) + " has rank " + std::to_string(t.rank));
  for (int c : lam)
    if (c < 0) throw SpecError("weight is not dominant for " + to_string(t));
}

Int weyl_dimension(const SimpleType& t, const Weight& lam) {
  require_dominant(t, lam);
  const RootDatum& rd = root_datum(t);
  Int num = 1, den = 1;
  for (const auto& alpha : rd.positive_roots()) {
    Int top = alpha.dual_height;  // <rho, alpha^vee>
    for (int i = 0; i < rd.rank(); ++i) top += Int(lam[i]) * alpha.coroot_coords[i];
    num *= top;
    den *= alpha.dual_height;
  }
  if (num % den != 0) throw SpecError("weyl_dimension: non-integral product");
  return num / den;
}

bool is_self_dual(const SimpleType& t, const Weight& lam) {
  require_dominant(t, lam);
  return dual_involution(t).apply(lam) == lam;
}

Bilinear fs_type(const SimpleType& t, const Weight& lam) {
  if (!is_self_dual(t, lam))
    throw SpecError("fs_type: representation is not self-dual");
  const RootDatum& rd = root_datum(t);
  long long pairing = 0;
  for (int i = 0; i < rd.rank(); ++i)
    pairing += static_cast<long long>(lam[i]) * rd.rho_check_doubled()[i];
  return pairing % 2 == 0 ? Bilinear::orthogonal : Bilinear::symplectic;
}

bool has_zero_weight(const SimpleType& t, const Weight& lam) {
  require_dominant(t, lam);
  return root_datum(t).in_root_lattice(lam);
}

IrrepProfile irrep_profile(const SimpleType& t, const Weight& lam) {
  IrrepProfile p;
  p.dim = weyl_dimension(t, lam);
  p.self_dual = is_self_dual(t, lam);
  p.bilinear = p.self_dual ? fs_type(t, lam) : Bilinear::none;
  p.has_zero_weight = has_zero_weight(t, lam);
  return p;
}

Int WeightTable::multiplicity(const Weight& mu) const {
  const RootDatum& rd = root_datum(type);
  auto it = dominant_multiplicities.find(rd.dominant_representative(mu));
  return it == dominant_multiplicities.end() ? Int(0) : it->second;
}

Int WeightTable::total_dimension() const {
  const RootDatum& rd = root_datum(type);
  Int total = 0;
  for (const auto& [mu, m] : dominant_multiplicities) total += m * orbit_size(rd, mu);
  return total;
}

WeightTable freudenthal_table(const SimpleType& t, const Weight& lam, const Int& dim_cap) {
  require_dominant(t, lam);
  const RootDatum& rd = root_datum(t);
  const int n = rd.rank();
  if (dim_cap != 0) {
    Int dim = weyl_dimension(t, lam);
    if (dim > dim_cap)
      throw SpecError("freudenthal_table: dimension " + dim.str() + " exceeds cap " +
                      dim_cap.str());
  }

  // box bound: root coordinates of lam - w0 lam = lam + theta(lam)
  Weight top(n);
  Weight theta_lam = dual_involution(t).apply(lam);
  for (int i = 0; i < n; ++i) top[i] = lam[i] + theta_lam[i];
  RatMatrix at = rat_zero_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at[i][j] = rd.cartan()[j][i];
  RatVec rhs(top.begin(), top.end());
  RatVec depth_rat = rat_solve(std::move(at), std::move(rhs));
  std::vector<int> box(n);
  for (int i = 0; i < n; ++i) {
    if (denominator(depth_rat[i]) != 1 || depth_rat[i] < 0)
      throw SpecError("freudenthal_table: malformed depth bound");
    box[i] = static_cast<int>(numerator(depth_rat[i]));
  }

  // dominant weights lam - sum n_i alpha_i, grouped by depth sum n_i
  std::map<int, std::vector<Weight>> by_depth;
  std::vector<int> counter(n, 0);
  for (;;) {
    Weight mu = lam;
    int depth = 0;
    for (int i = 0; i < n; ++i) {
      depth += counter[i];
      for (int j = 0; j < n; ++j) mu[j] -= counter[i] * rd.cartan()[i][j];
    }
    if (rd.is_dominant(mu)) by_depth[depth].push_back(std::move(mu));
    int pos = 0;
    while (pos < n && counter[pos] == box[pos]) counter[pos++] = 0;
    if (pos == n) break;
    ++counter[pos];
  }

  WeightTable table{t, lam, {}};
  Weight lam_rho = lam;
  for (int& c : lam_rho) ++c;
  const Int lam_norm = rd.form_scaled(lam_rho, lam_rho);

  for (auto& [depth, weights] : by_depth) {
    std::sort(weights.begin(), weights.end());
    for (const Weight& mu : weights) {
      if (depth == 0) {
        table.dominant_multiplicities[mu] = 1;
        continue;
      }
      Int num = 0;
      for (const auto& alpha : rd.positive_roots()) {
        for (int k = 1;; ++k) {
          Weight nu(n);
          for (int i = 0; i < n; ++i) nu[i] = mu[i] + k * alpha.weight_coords[i];
          Int mult = table.multiplicity(nu);
          if (mult == 0) break;  // weights along a root string are contiguous
          Weight alpha_w(alpha.weight_coords.begin(), alpha.weight_coords.end());
          num += mult * rd.form_scaled(nu, alpha_w);
        }
      }
      Weight mu_rho = mu;
      for (int& c : mu_rho) ++c;
      Int denom = lam_norm - rd.form_scaled(mu_rho, mu_rho);
      if (denom <= 0 || (2 * num) % denom != 0)
        throw SpecError("freudenthal_table: inconsistent recursion");
      table.dominant_multiplicities[mu] = 2 * num / denom;
    }
  }
  return table;
}

Int freudenthal_multiplicity(const SimpleType& t, const Weight& lam, const Weight& mu,
                             const Int& dim_cap) {
  if (static_cast<int>(mu.size()) != t.rank)
    throw SpecError("freudenthal_multiplicity: weight of wrong rank");
  return freudenthal_table(t, lam, dim_cap).multiplicity(mu);
}

std::vector<Weight> weyl_orbit(const RootDatum& rd, const Weight& dominant) {
  std::set<Weight> seen{dominant};
  std::vector<Weight> queue{dominant};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Weight w = queue[qi];
    for (int i = 0; i < rd.rank(); ++i) {
      Weight r = rd.reflect(i, w);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

Int orbit_size(const RootDatum& rd, const Weight& dominant) {
  return Int(weyl_orbit(rd, dominant).size());
}

namespace {

void enumerate_rec(const SimpleType& t, const Int& max_dim, Weight& current, int pos,
                   std::vector<Weight>& out) {
  if (pos == t.rank) {
    out.push_back(current);
    return;
  }
  for (int v = 0;; ++v) {
    current[pos] = v;
    // dimension is strictly increasing in every coordinate, so the partial
    // assignment (zeros beyond pos) is a lower bound for all extensions
    if (weyl_dimension(t, current) > max_dim) break;
    enumerate_rec(t, max_dim, current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<Weight> enumerate_dominant_weights(const SimpleType& t, const Int& max_dim) {
  Weight current(t.rank, 0);
  std::vector<Weight> out;
  enumerate_rec(t, max_dim, current, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace conjsense
