#include "conjsense/types.hpp"

#include <numeric>

namespace conjsense {

std::string to_string(const SimpleType& t) {
  return std::string(1, static_cast<char>(t.series)) + std::to_string(t.rank);
}

bool is_valid_input(const SimpleType& t) {
  if (t.rank < 1) return false;
  switch (t.series) {
    case Series::A: return t.rank >= 1;
    case Series::B: return t.rank >= 1;
    case Series::C: return t.rank >= 1;
    case Series::D: return t.rank >= 2;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    case Series::F: return t.rank == 4;
    case Series::G: return t.rank == 2;
  }
  return false;
}

bool is_valid_canonical(const SimpleType& t) {
  switch (t.series) {
    case Series::A: return t.rank >= 1;
    case Series::B: return t.rank >= 2;
    case Series::C: return t.rank >= 3;
    case Series::D: return t.rank >= 4;
    case Series::E: return t.rank >= 6 && t.rank <= 8;
    case Series::F: return t.rank == 4;
    case Series::G: return t.rank == 2;
  }
  return false;
}

Canonicalization canonicalize(const SimpleType& t) {
  if (t.rank < 1) throw SpecError("invalid type: rank must be >= 1, got " + to_string(t));
  if (!is_valid_input(t)) throw SpecError("invalid type: " + to_string(t));

  Canonicalization out;
  auto unchanged = [&] {
    std::vector<int> id(t.rank);
    std::iota(id.begin(), id.end(), 0);
    out.factors.push_back({t, std::move(id)});
  };

  if (t.series == Series::B && t.rank == 1) {
    out.factors.push_back({{Series::A, 1}, {0}});
    out.changed = true;
  } else if (t.series == Series::C && t.rank == 1) {
    out.factors.push_back({{Series::A, 1}, {0}});
    out.changed = true;
  } else if (t.series == Series::C && t.rank == 2) {
    // so5 = sp4 with long and short nodes exchanged
    out.factors.push_back({{Series::B, 2}, {1, 0}});
    out.changed = true;
  } else if (t.series == Series::D && t.rank == 2) {
    out.factors.push_back({{Series::A, 1}, {0}});
    out.factors.push_back({{Series::A, 1}, {1}});
    out.changed = true;
  } else if (t.series == Series::D && t.rank == 3) {
    // so6 = sl4: the D3 branch node becomes the middle A3 node
    out.factors.push_back({{Series::A, 3}, {1, 0, 2}});
    out.changed = true;
  } else {
    unchanged();
  }
  return out;
}

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < node_permutation.size(); ++i)
    if (node_permutation[i] != static_cast<int>(i)) return false;
  return true;
}

Weight DiagramAutomorphism::apply(const Weight& w) const {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[node_permutation[i]] = w[i];
  return out;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& then) const {
  DiagramAutomorphism out;
  out.node_permutation.resize(node_permutation.size());
  for (std::size_t i = 0; i < node_permutation.size(); ++i)
    out.node_permutation[i] = then.node_permutation[node_permutation[i]];
  out.signature = signature * then.signature;
  return out;
}

DiagramAutomorphism identity_automorphism(int rank) {
  DiagramAutomorphism out;
  out.node_permutation.resize(rank);
  std::iota(out.node_permutation.begin(), out.node_permutation.end(), 0);
  out.signature = 1;
  return out;
}

int permutation_signature(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace conjsense
