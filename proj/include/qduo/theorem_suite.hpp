#pragma once

// Registry of verification cases: each case binds one result about
// quasinilpotents / qnil-duo rings to concrete catalog instances and an
// expected outcome, and runs it exhaustively. run_all() produces a
// machine-readable report (schema "qduo.suite/1"); assertion and implication
// cases decide the exit code, recorded observations never do.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qduo/checkers.hpp"
#include "qduo/kernels.hpp"
#include "qduo/ring.hpp"

namespace qduo::suite {

enum class CaseKind { assertion, implication, recorded };
enum class Outcome { pass, fail, recorded, skipped_degenerate, skipped_error };

const char* to_string(CaseKind kind);
const char* to_string(Outcome outcome);

struct CaseResult {
  Outcome outcome = Outcome::fail;
  std::string detail;
  nlohmann::json witness;              // null unless the case failed
  std::size_t hypothesis_count = 0;    // implication cases: instances with H true
  double millis = 0.0;
};

struct CaseContext {
  kernels::Exec exec = kernels::Exec::serial;
  std::map<std::string, RingPtr> rings;           // successfully built catalog, by id
  std::vector<std::string> build_errors;          // "id: message"

  struct Skip {
    std::string reason;
  };
  /// Catalog ring by id; throws Skip when the id failed to build or is absent.
  RingPtr need(const std::string& id) const;
  /// All successfully built catalog rings, ordered by id.
  std::vector<std::pair<std::string, RingPtr>> catalog() const;
};

struct TheoremCase {
  std::string id;         // stable, unique, report-sorted
  std::string paper_ref;  // result label, e.g. "Prop 2.4"
  std::string statement;  // the checked claim, in plain words
  CaseKind kind = CaseKind::assertion;
  std::vector<std::string> inputs;  // catalog ids; "<catalog>" = every built ring
  std::function<CaseResult(const CaseContext&)> run;
};

/// All registered cases, sorted by id. Ids are unique.
const std::vector<TheoremCase>& case_registry();

/// Runs one case against a prepared context, translating missing-input skips
/// and crashes into outcomes instead of exceptions. Does not fill millis.
CaseResult run_case(const TheoremCase& tc, const CaseContext& ctx);

/// The default instance set, in catalog order: (id, descriptor).
const std::vector<std::pair<std::string, nlohmann::json>>& default_catalog();

struct SuiteReport {
  nlohmann::json doc;
  bool complete = false;
  int failures = 0;

  /// 0 iff every assertion/implication case passed and the catalog built.
  int exit_code() const;
  std::string to_text() const;
};

SuiteReport run_all(const std::vector<std::pair<std::string, nlohmann::json>>& catalog,
                    kernels::Exec exec = kernels::default_exec());

/// Strips volatile fields (millis, engine threads) so two reports from the
/// same inputs compare byte-identical.
nlohmann::json stable_view(const nlohmann::json& report);

}  // namespace qduo::suite
