#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "conjsense/adjoint_class.hpp"
#include "conjsense/report.hpp"
#include "conjsense/verify.hpp"

namespace {

using namespace conjsense;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitUndecided = 3;

long default_cap() {
  if (const char* env = std::getenv("CONJSENSE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return v;
    std::cerr << "warning: ignoring malformed CONJSENSE_CAP\n";
  }
  return kDefaultOracleCap;
}

int run_analyze(const std::string& group, const std::string& rep, const RunOptions& opts) {
  QuerySpec q = parse_query(group, rep);
  DecisionOptions dopts{opts.cap, opts.oracle, opts.seed};
  AnalysisOutcome outcome = analyze(q.group, q.rep, dopts);
  outcome.notes.insert(outcome.notes.begin(), q.notes.begin(), q.notes.end());
  std::cout << render_analysis(q, outcome, opts);
  return outcome.report.has_undecided() ? kExitUndecided : kExitOk;
}

int run_enumerate(const std::string& mode, int max_rank, const RunOptions& opts) {
  if (mode == "simple") {
    std::cout << render_adjoint_table(enumerate_adjoint(max_rank), opts);
    return kExitOk;
  }
  if (mode == "pairs") {
    std::vector<SimpleType> even;
    for (const auto& v : enumerate_adjoint(max_rank)) even.push_back(v.type);
    std::vector<PairRow> rows;
    for (std::size_t i = 0; i < even.size(); ++i)
      for (std::size_t j = i; j < even.size(); ++j) {
        ConjugacyReport r = classify_adjoint_product({even[i], even[j]});
        PairRow row{even[i], even[j], r.lfmo == Verdict::yes, ""};
        for (const auto& reason : r.reasons)
          if (reason.rule == "swap-parity-mod4" || reason.rule == "adjoint-node-signature")
            row.reason = reason.render();
        rows.push_back(std::move(row));
      }
    std::cout << render_pair_table(rows, opts);
    return kExitOk;
  }
  throw SpecError("enumerate: mode must be 'simple' or 'pairs'");
}

int run_verify(const std::string& suite, const RunOptions& opts) {
  DecisionOptions dopts{opts.cap, opts.oracle, opts.seed};
  SuiteResult result;
  if (suite == "fs")
    result = verify_fs(dopts);
  else if (suite == "table1")
    result = verify_table1(dopts);
  else if (suite == "dims")
    result = verify_dims();
  else if (suite == "isogeny")
    result = verify_isogeny(200, opts.seed);
  else if (suite == "eigen")
    result = verify_eigen(opts.seed);
  else
    throw SpecError("verify: unknown suite '" + suite +
                    "' (expected fs, table1, dims, isogeny or eigen)");

  std::cout << "suite: " << result.suite << "\n"
            << "seed: " << opts.seed << "\n"
            << "checked: " << result.checked << "\n"
            << "skipped: " << result.skipped << "\n"
            << "failed: " << result.failed << "\n";
  for (const auto& f : result.failures) std::cout << "  ! " << f << "\n";
  std::cout << (result.passed() ? "pass" : "fail") << "\n";
  return result.passed() ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conjsense: local vs global conjugacy decisions for self-dual "
               "representations into even orthogonal groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opts;
  opts.cap = default_cap();
  std::string format = "text";
  std::string oracle = "on";
  app.add_option("--format", format, "output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cap", opts.cap, "oracle dimension cap (0 = unlimited)");
  app.add_option("--seed", opts.seed, "seed for randomized verification");
  app.add_option("--oracle", oracle, "enable the matrix oracle: on or off")
      ->check(CLI::IsMember({"on", "off"}));

  std::string group, rep;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one group/representation query");
  analyze_cmd->add_option("group", group, "group, e.g. B2, B2xB4, T1xA4")->required();
  analyze_cmd->add_option("rep", rep,
                          "representation: adjoint, [..]*[..] tensors joined by +, "
                          "pair: prefix for polarized pairs, ^m for multiplicity")
      ->required();

  std::string mode = "simple";
  int max_rank = 12;
  auto* enum_cmd = app.add_subcommand("enumerate", "tabulate adjoint verdicts");
  enum_cmd->add_option("--mode", mode, "simple or pairs")
      ->check(CLI::IsMember({"simple", "pairs"}));
  enum_cmd->add_option("--max-rank", max_rank, "largest rank to enumerate");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "fs, table1, dims, isogeny or eigen")->required();

  int table_rank = 12;
  auto* table_cmd = app.add_subcommand("table1", "signature table for even-rank types");
  table_cmd->add_option("--max-rank", table_rank, "largest rank to tabulate");

  CLI11_PARSE(app, argc, argv);
  opts.format = format == "structured" ? ReportFormat::structured : ReportFormat::text;
  opts.oracle = oracle == "on";

  try {
    if (analyze_cmd->parsed()) return run_analyze(group, rep, opts);
    if (enum_cmd->parsed()) return run_enumerate(mode, max_rank, opts);
    if (verify_cmd->parsed()) return run_verify(suite, opts);
    if (table_cmd->parsed()) {
      std::cout << render_adjoint_table(enumerate_adjoint(table_rank), opts);
      return kExitOk;
    }
  } catch (const conjsense::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
