#include "conjsense/structure.hpp"

#include <set>

namespace conjsense {

std::string to_string(const GroupSpec& g) {
  std::string out;
  if (g.torus_rank > 0) out += "T" + std::to_string(g.torus_rank);
  for (const auto& t : g.factors) {
    if (!out.empty()) out += "x";
    out += to_string(t);
  }
  if (out.empty()) out = "T0";
  return out;
}

void validate(const GroupSpec& g, const SelfDualRepSpec& rho) {
  for (const auto& t : g.factors)
    if (!is_valid_canonical(t))
      throw SpecError("group factor " + to_string(t) + " is not canonical");
  if (g.torus_rank < 0) throw SpecError("negative torus rank");
  if (g.factors.empty() && !rho.summands.empty())
    throw SpecError("a pure torus carries no self-dual representation in scope");
  if (rho.summands.empty()) throw SpecError("representation has no summands");

  std::set<FactorizedIrrep> seen;
  for (const auto& s : rho.summands) {
    if (s.multiplicity < 1) throw SpecError("summand multiplicity must be >= 1");
    if (s.irrep.per_factor.size() != g.factors.size())
      throw SpecError("summand has " + std::to_string(s.irrep.per_factor.size()) +
                      " factors, group has " + std::to_string(g.factors.size()));
    for (std::size_t i = 0; i < g.factors.size(); ++i)
      require_dominant(g.factors[i], s.irrep.per_factor[i]);
    if (!seen.insert(s.irrep).second)
      throw SpecError("summands must be pairwise distinct; use the multiplicity field");

    bool self_dual = true;
    for (std::size_t i = 0; i < g.factors.size(); ++i)
      if (!is_self_dual(g.factors[i], s.irrep.per_factor[i])) self_dual = false;
    if (s.polarized_pair && self_dual)
      throw SpecError("polarized pair of a self-dual constituent; enter it as a plain summand");
    if (!s.polarized_pair && !self_dual)
      throw SpecError("non-self-dual summand; enter it as a polarized pair");
  }
}

IrrepProfile profile_constituent(const GroupSpec& g, const FactorizedIrrep& f) {
  if (f.per_factor.size() != g.factors.size())
    throw SpecError("profile_constituent: shape mismatch");
  IrrepProfile p;
  p.dim = 1;
  p.self_dual = true;
  p.has_zero_weight = true;
  int symplectic_factors = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    IrrepProfile fp = irrep_profile(g.factors[i], f.per_factor[i]);
    p.dim *= fp.dim;
    if (!fp.self_dual) p.self_dual = false;
    if (!fp.has_zero_weight) p.has_zero_weight = false;
    if (fp.bilinear == Bilinear::symplectic) ++symplectic_factors;
  }
  p.bilinear = !p.self_dual          ? Bilinear::none
               : symplectic_factors % 2 ? Bilinear::symplectic
                                        : Bilinear::orthogonal;
  return p;
}

std::pair<GroupSpec, SelfDualRepSpec> canonicalize_spec(const GroupSpec& g,
                                                        const SelfDualRepSpec& rho,
                                                        std::vector<std::string>* notes) {
  GroupSpec ng;
  ng.torus_rank = g.torus_rank;
  ng.tag = g.tag;
  std::vector<Canonicalization> per_factor;
  for (const auto& t : g.factors) {
    Canonicalization c = canonicalize(t);
    if (c.changed && notes) {
      std::string to;
      for (const auto& f : c.factors) {
        if (!to.empty()) to += "x";
        to += to_string(f.type);
      }
      notes->push_back("canonicalized " + to_string(t) + " to " + to);
    }
    for (const auto& f : c.factors) ng.factors.push_back(f.type);
    per_factor.push_back(std::move(c));
  }
  SelfDualRepSpec nrho;
  for (const auto& s : rho.summands) {
    if (s.irrep.per_factor.size() != g.factors.size())
      throw SpecError("canonicalize_spec: summand shape mismatch");
    Summand ns;
    ns.multiplicity = s.multiplicity;
    ns.polarized_pair = s.polarized_pair;
    for (std::size_t k = 0; k < g.factors.size(); ++k) {
      const Weight& w = s.irrep.per_factor[k];
      if (static_cast<int>(w.size()) != g.factors[k].rank)
        throw SpecError("weight for factor " + to_string(g.factors[k]) + " has " +
                        std::to_string(w.size()) + " coordinates");
      for (const auto& cf : per_factor[k].factors) {
        Weight nw(cf.coord_map.size());
        for (std::size_t i = 0; i < cf.coord_map.size(); ++i) nw[i] = w[cf.coord_map[i]];
        ns.irrep.per_factor.push_back(std::move(nw));
      }
    }
    nrho.summands.push_back(std::move(ns));
  }
  return {std::move(ng), std::move(nrho)};
}

StructureReport analyze_structure(const GroupSpec& g, const SelfDualRepSpec& rho) {
  validate(g, rho);
  StructureReport r;
  r.total_dim = 0;
  r.all_self_dual = true;
  r.essential = true;
  bool admits_orthogonal = true;
  bool admits_symplectic = true;

  for (const auto& s : rho.summands) {
    IrrepProfile p = profile_constituent(g, s.irrep);
    if (s.polarized_pair) {
      // sigma + sigma^vee: hyperbolic, compatible with either total form
      r.total_dim += 2 * p.dim * s.multiplicity;
      r.all_self_dual = false;
      r.essential = false;
      continue;
    }
    r.total_dim += p.dim * s.multiplicity;
    if (s.multiplicity > 1) r.essential = false;
    if (p.bilinear == Bilinear::orthogonal) {
      if (p.dim % 2 != 0) r.has_odd_orthogonal_constituent = true;
      if (s.multiplicity % 2 != 0) admits_symplectic = false;
    } else {
      if (s.multiplicity % 2 != 0) admits_orthogonal = false;
    }
  }
  if (!r.all_self_dual) r.essential = false;

  r.total_bilinear = admits_orthogonal   ? TotalBilinear::orthogonal
                     : admits_symplectic ? TotalBilinear::symplectic
                                         : TotalBilinear::mixed_none;
  return r;
}

}  // namespace conjsense
