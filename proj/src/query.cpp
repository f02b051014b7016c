#include "conjsense/query.hpp"

#include <cctype>

#include "conjsense/root_datum.hpp"

namespace conjsense {

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& msg) {
  throw SpecError("parse error at position " + std::to_string(pos) + " in \"" + text +
                  "\": " + msg);
}

int read_int(const std::string& s, std::size_t& pos, bool allow_negative) {
  std::size_t start = pos;
  bool neg = false;
  if (allow_negative && pos < s.size() && s[pos] == '-') {
    neg = true;
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    parse_fail(s, start, "expected an integer");
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000) parse_fail(s, start, "integer out of range");
    ++pos;
  }
  return static_cast<int>(neg ? -v : v);
}

GroupSpec parse_group_text(const std::string& text) {
  GroupSpec g;
  g.tag = IsogenyTag::unspecified;
  std::size_t pos = 0;
  if (text.empty()) parse_fail(text, 0, "empty group");
  while (true) {
    if (pos >= text.size()) parse_fail(text, pos, "expected a group factor");
    char c = text[pos];
    if (c == 'T') {
      ++pos;
      g.torus_rank += read_int(text, pos, false);
    } else if (c >= 'A' && c <= 'G') {
      ++pos;
      int rank = read_int(text, pos, false);
      SimpleType t{static_cast<Series>(c), rank};
      if (!is_valid_input(t)) parse_fail(text, pos, "invalid type " + to_string(t));
      g.factors.push_back(t);
    } else {
      parse_fail(text, pos, "expected a series letter A..G or T<k>");
    }
    if (pos == text.size()) break;
    if (text[pos] != 'x') parse_fail(text, pos, "expected 'x' between factors");
    ++pos;
  }
  return g;
}

Weight parse_weights(const std::string& s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '[') parse_fail(s, pos, "expected '['");
  ++pos;
  Weight w;
  while (true) {
    w.push_back(read_int(s, pos, true));
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos >= s.size() || s[pos] != ']') parse_fail(s, pos, "expected ']'");
  ++pos;
  return w;
}

bool consume_tensor_sep(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '*') {
    ++pos;
    return true;
  }
  // UTF-8 tensor sign as an alternative separator
  static const std::string kTensor = "\xE2\x8A\x97";
  if (s.compare(pos, kTensor.size(), kTensor) == 0) {
    pos += kTensor.size();
    return true;
  }
  return false;
}

}  // namespace

QuerySpec parse_query(const std::string& group_text, const std::string& rep_text) {
  QuerySpec q;
  GroupSpec raw = parse_group_text(group_text);

  if (rep_text == "adjoint") {
    // canonicalize the group first; the adjoint weight lives on the
    // canonical types
    SelfDualRepSpec empty;
    std::tie(q.group, std::ignore) = canonicalize_spec(raw, empty, &q.notes);
    if (q.group.factors.empty())
      throw SpecError("a pure torus has no adjoint representation in scope");
    Summand s;
    for (const auto& t : q.group.factors)
      s.irrep.per_factor.push_back(root_datum(t).highest_root());
    q.rep.summands.push_back(std::move(s));
    q.adjoint_shorthand = true;
    return q;
  }

  SelfDualRepSpec raw_rep;
  std::size_t pos = 0;
  while (true) {
    Summand s;
    if (rep_text.compare(pos, 5, "pair:") == 0) {
      s.polarized_pair = true;
      pos += 5;
    }
    s.irrep.per_factor.push_back(parse_weights(rep_text, pos));
    while (consume_tensor_sep(rep_text, pos))
      s.irrep.per_factor.push_back(parse_weights(rep_text, pos));
    if (pos < rep_text.size() && rep_text[pos] == '^') {
      ++pos;
      s.multiplicity = read_int(rep_text, pos, false);
      if (s.multiplicity < 1) parse_fail(rep_text, pos, "multiplicity must be >= 1");
    }
    if (s.irrep.per_factor.size() != raw.factors.size())
      throw SpecError("summand has " + std::to_string(s.irrep.per_factor.size()) +
                      " tensor factors, group " + group_text + " has " +
                      std::to_string(raw.factors.size()) + " simple factors");
    raw_rep.summands.push_back(std::move(s));
    if (pos == rep_text.size()) break;
    if (rep_text[pos] != '+') parse_fail(rep_text, pos, "expected '+' between summands");
    ++pos;
  }
  std::tie(q.group, q.rep) = canonicalize_spec(raw, raw_rep, &q.notes);
  return q;
}

std::string print_group(const GroupSpec& g) { return to_string(g); }

std::string print_rep(const SelfDualRepSpec& rep, bool adjoint_shorthand) {
  if (adjoint_shorthand) return "adjoint";
  std::string out;
  for (const auto& s : rep.summands) {
    if (!out.empty()) out += "+";
    if (s.polarized_pair) out += "pair:";
    for (std::size_t k = 0; k < s.irrep.per_factor.size(); ++k) {
      if (k) out += "*";
      out += "[";
      for (std::size_t i = 0; i < s.irrep.per_factor[k].size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.irrep.per_factor[k][i]);
      }
      out += "]";
    }
    if (s.multiplicity > 1) out += "^" + std::to_string(s.multiplicity);
  }
  return out;
}

}  // namespace conjsense
