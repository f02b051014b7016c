#pragma once

// Textual grammar for groups and representations.
//
//   group   := part ("x" part)*            part := "T"<k> | <series><rank>
//   rep     := "adjoint" | summand ("+" summand)*
//   summand := ["pair:"] tensor ["^" mult]
//   tensor  := weights (("*" | "⊗") weights)*
//   weights := "[" int ("," int)* "]"
//
// Parsing canonicalizes low-rank types (C2 -> B2, D3 -> A3, ...) and
// transports the entered weights along, so printed queries round-trip.

#include <string>
#include <vector>

#include "conjsense/structure.hpp"

namespace conjsense {

struct QuerySpec {
  GroupSpec group;  // canonical factor types; torus and tag preserved
  SelfDualRepSpec rep;
  bool adjoint_shorthand = false;
  std::vector<std::string> notes;  // canonicalization rewrites

  bool operator==(const QuerySpec& o) const {
    return group == o.group && rep == o.rep && adjoint_shorthand == o.adjoint_shorthand;
  }
};

// Throws SpecError with the offending position in the message.
QuerySpec parse_query(const std::string& group_text, const std::string& rep_text);

std::string print_group(const GroupSpec& g);
std::string print_rep(const SelfDualRepSpec& rep, bool adjoint_shorthand);

}  // namespace conjsense
