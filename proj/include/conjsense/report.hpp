#pragma once

// Report documents: a single structured form (nested key-value pairs with
// stable field order) plus a plain-text renderer. Exact values only;
// reports are byte-identical across runs of the same query and seed.

#include <string>

#include "conjsense/adjoint_class.hpp"
#include "conjsense/conjugacy.hpp"
#include "conjsense/query.hpp"

namespace conjsense {

enum class ReportFormat { text, structured };

struct RunOptions {
  long cap = kDefaultOracleCap;
  bool oracle = true;
  std::uint64_t seed = 0;
  ReportFormat format = ReportFormat::text;
};

std::string render_analysis(const QuerySpec& query, const AnalysisOutcome& outcome,
                            const RunOptions& opts);

std::string render_adjoint_table(const std::vector<AdjointVerdict>& rows,
                                 const RunOptions& opts);

struct PairRow {
  SimpleType left;
  SimpleType right;
  bool lfmo = false;
  std::string reason;
};

std::string render_pair_table(const std::vector<PairRow>& rows, const RunOptions& opts);

}  // namespace conjsense
