#include "conjsense/report.hpp"

#include <sstream>

#include "json.hpp"

namespace conjsense {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string bilinear_name(TotalBilinear b) {
  switch (b) {
    case TotalBilinear::orthogonal: return "orthogonal";
    case TotalBilinear::symplectic: return "symplectic";
    case TotalBilinear::mixed_none: return "mixed/none";
  }
  return "?";
}

ordered_json options_json(const RunOptions& opts) {
  ordered_json j;
  j["cap"] = opts.cap;
  j["oracle"] = opts.oracle ? "on" : "off";
  j["seed"] = opts.seed;
  return j;
}

ordered_json m_prime_json(Verdict v) {
  if (v == Verdict::yes) return 2;
  if (v == Verdict::no) return 1;
  return "undecided";
}

}  // namespace

std::string render_analysis(const QuerySpec& query, const AnalysisOutcome& outcome,
                            const RunOptions& opts) {
  const ConjugacyReport& r = outcome.report;
  if (opts.format == ReportFormat::structured) {
    ordered_json j;
    j["query"]["group"] = print_group(outcome.group);
    j["query"]["rep"] = print_rep(outcome.rep, query.adjoint_shorthand);
    j["options"] = options_json(opts);
    j["structure"]["total_dim"] = outcome.structure.total_dim.str();
    j["structure"]["all_self_dual"] = outcome.structure.all_self_dual;
    j["structure"]["essential"] = outcome.structure.essential;
    j["structure"]["odd_orthogonal_constituent"] =
        outcome.structure.has_odd_orthogonal_constituent;
    j["structure"]["total_bilinear"] = bilinear_name(outcome.structure.total_bilinear);
    j["verdicts"]["weight1"] = r.weight1;
    j["verdicts"]["essential"] = r.essential;
    j["verdicts"]["condition_B"] = r.condition_B;
    j["verdicts"]["condition_C_fails"] = to_string(r.condition_C_fails);
    j["verdicts"]["m"] = r.m;
    j["verdicts"]["m_prime"] = m_prime_json(r.m_prime_two);
    j["verdicts"]["lfmo"] = to_string(r.lfmo);
    j["reasons"] = ordered_json::array();
    for (const auto& reason : r.reasons) j["reasons"].push_back(reason.render());
    j["notes"] = ordered_json::array();
    for (const auto& n : outcome.notes) j["notes"].push_back(n);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "group: " << print_group(outcome.group) << "\n";
  os << "rep: " << print_rep(outcome.rep, query.adjoint_shorthand) << "\n";
  os << "total_dim: " << outcome.structure.total_dim.str() << "\n";
  os << "total_bilinear: " << bilinear_name(outcome.structure.total_bilinear) << "\n";
  os << "weight1: " << (r.weight1 ? "true" : "false") << "\n";
  os << "essential: " << (r.essential ? "true" : "false") << "\n";
  os << "condition_B: " << (r.condition_B ? "true" : "false") << "\n";
  os << "condition_C_fails: " << to_string(r.condition_C_fails) << "\n";
  os << "m: " << r.m << "\n";
  os << "m_prime: "
     << (r.m_prime_two == Verdict::yes   ? "2"
         : r.m_prime_two == Verdict::no ? "1"
                                        : "undecided")
     << "\n";
  os << "lfmo: " << to_string(r.lfmo) << "\n";
  os << "reasons:\n";
  for (const auto& reason : r.reasons) os << "  - " << reason.render() << "\n";
  if (!outcome.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : outcome.notes) os << "  - " << n << "\n";
  }
  return os.str();
}

std::string render_adjoint_table(const std::vector<AdjointVerdict>& rows,
                                 const RunOptions& opts) {
  if (opts.format == ReportFormat::structured) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& v : rows) {
      ordered_json row;
      row["type"] = to_string(v.type);
      row["even_rank"] = v.even_rank;
      row["automorphisms"] = v.diagram_signatures.size();
      row["signatures"] = v.diagram_signatures;
      row["lfmo"] = v.lfmo;
      j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "type  autos  signatures      lfmo\n";
  for (const auto& v : rows) {
    std::string sig;
    for (int s : v.diagram_signatures) sig += s > 0 ? "+" : "-";
    os << to_string(v.type);
    for (std::size_t p = to_string(v.type).size(); p < 6; ++p) os << ' ';
    std::string autos = std::to_string(v.diagram_signatures.size());
    os << autos;
    for (std::size_t p = autos.size(); p < 7; ++p) os << ' ';
    os << sig;
    for (std::size_t p = sig.size(); p < 16; ++p) os << ' ';
    os << (v.lfmo ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string render_pair_table(const std::vector<PairRow>& rows, const RunOptions& opts) {
  if (opts.format == ReportFormat::structured) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["pair"] = to_string(r.left) + "," + to_string(r.right);
      row["lfmo"] = r.lfmo;
      row["reason"] = r.reason;
      j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "(" << to_string(r.left) << "," << to_string(r.right) << "): "
       << (r.lfmo ? "yes" : "no") << "  # " << r.reason << "\n";
  }
  return os.str();
}

}  // namespace conjsense
