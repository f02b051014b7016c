#pragma once

// Simple Lie types, low-rank canonicalization and Dynkin diagram
// automorphisms (as node permutations with their signatures).

#include <compare>
#include <string>
#include <vector>

#include "conjsense/numeric.hpp"

namespace conjsense {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Series series;
  int rank;

  auto operator<=>(const SimpleType&) const = default;
};

std::string to_string(const SimpleType& t);

// Acceptable as user input before canonicalization.
bool is_valid_input(const SimpleType& t);

// Canonical ranges: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F4, G2.
bool is_valid_canonical(const SimpleType& t);

// A canonicalization target: the replacement type together with the node
// relabeling, so highest weights transport along.
// new_weight[i] = old_weight[coord_map[i]].
struct CanonicalFactor {
  SimpleType type;
  std::vector<int> coord_map;
};

struct Canonicalization {
  std::vector<CanonicalFactor> factors;  // D2 splits into two A1 factors
  bool changed = false;
};

// Rewrites B1->A1, C1->A1, C2->B2, D2->A1xA1, D3->A3; everything else is
// returned unchanged. Throws SpecError for invalid series/rank.
Canonicalization canonicalize(const SimpleType& t);

// Weights in fundamental-weight coordinates.
using Weight = std::vector<int>;

struct DiagramAutomorphism {
  std::vector<int> node_permutation;  // 0-indexed: node i -> node_permutation[i]
  int signature = 1;                  // parity of the permutation

  bool is_identity() const;
  Weight apply(const Weight& w) const;            // permutes coordinates
  DiagramAutomorphism compose(const DiagramAutomorphism& then) const;
  auto operator<=>(const DiagramAutomorphism&) const = default;
};

DiagramAutomorphism identity_automorphism(int rank);
int permutation_signature(const std::vector<int>& perm);

}  // namespace conjsense
