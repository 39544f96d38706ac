#include "qduo/theorem_suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "qduo/descriptor.hpp"
#include "qduo/version.hpp"

namespace qduo::suite {

using nlohmann::json;

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::assertion: return "assertion";
    case CaseKind::implication: return "implication";
    case CaseKind::recorded: return "recorded-observation";
  }
  return "?";
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::recorded: return "recorded";
    case Outcome::skipped_degenerate: return "skipped-degenerate";
    case Outcome::skipped_error: return "skipped-error";
  }
  return "?";
}

RingPtr CaseContext::need(const std::string& id) const {
  auto it = rings.find(id);
  if (it != rings.end()) return it->second;
  for (const auto& err : build_errors)
    if (err.rfind(id + ":", 0) == 0) throw Skip{"input " + err};
  throw Skip{"input ring \"" + id + "\" is not in the catalog"};
}

std::vector<std::pair<std::string, RingPtr>> CaseContext::catalog() const {
  std::vector<std::pair<std::string, RingPtr>> out(rings.begin(), rings.end());
  return out;
}

const std::vector<std::pair<std::string, json>>& default_catalog() {
  static const std::vector<std::pair<std::string, json>> cat = [] {
    std::vector<std::pair<std::string, json>> out;
    const char* ids[] = {
        "z2", "z3", "z4", "z5", "z6", "z7", "z8", "z9",
        "z2xz3", "z4xz4",
        "m2-z2", "m2-z4", "u2-z2", "u2-z4", "d2-z4", "d3-z2", "v3-z2", "v3-z4",
        "l11-z4", "l01-z4", "l10-z4", "l00-z4",
        "h11-z4", "h13-z4",
        "k0-z2", "k0-z4", "k1-z2",
        "dorroh-m2z2-z2", "dorroh-z4-z4",
        "hurwitz-z2-id-2", "hurwitz-z4-id-2", "skewpower-z2xz2-swap-2",
        "t2-z4-z4",
        "xuxu-local16", "d3pattern-z4",
        "corner-m2z2-e11", "corner-m2z2-upper",
    };
    for (const char* id : ids) out.emplace_back(id, rings::builtin_descriptor(id));
    return out;
  }();
  return cat;
}

int SuiteReport::exit_code() const { return (complete && failures == 0) ? 0 : 1; }

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << doc["engine"].get<std::string>() << "  exec=" << doc["exec"].get<std::string>()
     << "\ncatalog: " << doc["catalog"].size() << " descriptors, digest "
     << doc["catalog_digest"].get<std::string>() << "\n";
  for (const auto& entry : doc["catalog"]) {
    if (entry.contains("error"))
      os << "  [build-error] " << entry["id"].get<std::string>() << ": "
         << entry["error"].get<std::string>() << "\n";
  }
  for (const auto& c : doc["cases"]) {
    const std::string outcome = c["outcome"].get<std::string>();
    std::string tag = outcome == "pass"                ? "PASS"
                      : outcome == "fail"              ? "FAIL"
                      : outcome == "recorded"          ? "REC "
                      : outcome == "skipped-degenerate" ? "SKIP"
                                                        : "ERR ";
    os << "[" << tag << "] " << c["case_id"].get<std::string>();
    os << "  (" << c["millis"].get<double>() << " ms)";
    if (c.contains("detail")) os << "  " << c["detail"].get<std::string>();
    os << "\n";
  }
  const auto& s = doc["summary"];
  os << "summary: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["recorded"]
     << " recorded, " << s["skipped_degenerate"] << " skipped (degenerate), "
     << s["skipped_error"] << " errors; catalog "
     << (complete ? "complete" : "INCOMPLETE") << "\n";
  return os.str();
}

CaseResult run_case(const TheoremCase& tc, const CaseContext& ctx) {
  try {
    return tc.run(ctx);
  } catch (const CaseContext::Skip& skip) {
    CaseResult r;
    r.outcome = Outcome::skipped_error;
    r.detail = skip.reason;
    return r;
  } catch (const std::exception& e) {
    CaseResult r;
    r.outcome = Outcome::skipped_error;
    r.detail = std::string("case crashed: ") + e.what();
    return r;
  }
}

SuiteReport run_all(const std::vector<std::pair<std::string, json>>& catalog,
                    kernels::Exec exec) {
  using Clock = std::chrono::steady_clock;
  CaseContext ctx;
  ctx.exec = exec;

  json catalog_json = json::array();
  std::string digest_input;
  for (const auto& [id, desc] : catalog) {
    json entry{{"id", id}};
    try {
      RingPtr ring = rings::build(desc);
      entry["name"] = ring->name();
      entry["kind"] = ring->kind();
      entry["order"] = ring->order();
      entry["descriptor"] = json::parse(ring->descriptor_json());
      digest_input += id + "=" + ring->descriptor_json() + ";";
      ctx.rings.emplace(id, std::move(ring));
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      ctx.build_errors.push_back(id + ": " + e.what());
      digest_input += id + "=<error>;";
    }
    catalog_json.push_back(std::move(entry));
  }

  char digest[32];
  std::snprintf(digest, sizeof digest, "fnv1a64:%016llx",
                static_cast<unsigned long long>(rings::fnv1a64(digest_input)));

  json cases = json::array();
  int failures = 0, passes = 0, recorded = 0, skipped_deg = 0, skipped_err = 0;
  for (const auto& tc : case_registry()) {
    const auto start = Clock::now();
    CaseResult result = run_case(tc, ctx);
    result.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

    switch (result.outcome) {
      case Outcome::pass: ++passes; break;
      case Outcome::fail: ++failures; break;
      case Outcome::recorded: ++recorded; break;
      case Outcome::skipped_degenerate: ++skipped_deg; break;
      case Outcome::skipped_error: ++skipped_err; break;
    }

    json c{{"case_id", tc.id},
           {"paper_ref", tc.paper_ref},
           {"statement", tc.statement},
           {"kind", to_string(tc.kind)},
           {"inputs", tc.inputs},
           {"outcome", to_string(result.outcome)},
           {"millis", result.millis}};
    if (!result.detail.empty()) c["detail"] = result.detail;
    if (!result.witness.is_null()) c["witness"] = result.witness;
    if (tc.kind == CaseKind::implication) c["hypothesis_count"] = result.hypothesis_count;
    cases.push_back(std::move(c));
  }

  SuiteReport report;
  report.complete = ctx.build_errors.empty() && skipped_err == 0;
  report.failures = failures;
  report.doc = json{{"schema", "qduo.suite/1"},
                    {"engine", engine_id()},
                    {"exec", kernels::to_string(exec)},
                    {"catalog", std::move(catalog_json)},
                    {"catalog_digest", digest},
                    {"cases", std::move(cases)},
                    {"summary", json{{"pass", passes},
                                     {"fail", failures},
                                     {"recorded", recorded},
                                     {"skipped_degenerate", skipped_deg},
                                     {"skipped_error", skipped_err},
                                     {"complete", report.complete}}}};
  return report;
}

nlohmann::json stable_view(const json& report) {
  json out = report;
  if (out.contains("cases"))
    for (auto& c : out["cases"]) c.erase("millis");
  return out;
}

}  // namespace qduo::suite
