// Acceptance suite: one criterion per section, one pass/fail line each.
// Criteria 1 and 2 run against the library directly; 3 through 7 are read off
// a full `verify` run of the bundled CLI; 8 checks the CLI run itself (exit
// code, wall clock, byte-stable reports modulo timing fields).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qduo/checkers.hpp"
#include "qduo/descriptor.hpp"
#include "qduo/theorem_suite.hpp"

using namespace qduo;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what, double ms) {
  std::printf("[%s] criterion %d: %s  (%.0f ms)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), ms);
  if (!ok) ++g_failures;
}

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

bool criterion1() {
  auto r = rings::builtin("xuxu-local16");
  std::set<std::string> got;
  for (Elem e : r->qnil().members()) got.insert(r->label(e));
  const std::set<std::string> want{"0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"};
  if (got != want) return false;
  if (!checks::is_local(*r).holds) return false;
  const Elem x = r->encode({0, 1, 0}), y = r->encode({0, 0, 1});
  if (r->mul(x, y) != r->encode({2, 0, 0})) return false;
  bool square_nonzero = false;
  for (Elem p : r->qnil().members())
    for (Elem q : r->qnil().members())
      if (r->mul(p, q) != r->zero()) square_nonzero = true;
  if (!square_nonzero) return false;
  auto v = checks::is_right_qnil_duo(*r);
  if (v.holds) return false;
  return checks::reverify(*r, "right-qnil-duo", v.witness);
}

bool criterion2() {
  auto L = rings::builtin("l11-z4");
  if (L->order() != 1024) return false;
  const Elem A = L->encode({0, 1, 2, 1, 3});
  const Elem B = L->encode({2, 1, 2, 3, 2});
  if (!L->qnil().contains(B)) return false;
  const Elem BA = L->mul(B, A);
  if (BA != L->encode({0, 2, 0, 3, 2})) return false;
  for (Elem C : L->qnil().members())
    if (L->mul(A, C) == BA) return false;
  auto v = checks::is_right_qnil_duo(*L);
  if (v.holds) return false;
  return checks::reverify(*L, "right-qnil-duo", v.witness);
}

struct SuiteView {
  std::map<std::string, json> cases;
  bool ok = false;

  bool passed(const std::string& id) const {
    auto it = cases.find(id);
    return it != cases.end() && it->second.at("outcome") == "pass";
  }
  double millis(const std::string& id) const {
    auto it = cases.find(id);
    return it == cases.end() ? 0.0 : it->second.at("millis").get<double>();
  }
  std::size_t hypothesis_count(const std::string& id) const {
    auto it = cases.find(id);
    if (it == cases.end() || !it->second.contains("hypothesis_count")) return 0;
    return it->second.at("hypothesis_count").get<std::size_t>();
  }
};

SuiteView load_report(const std::string& path) {
  SuiteView view;
  std::ifstream in(path);
  if (!in) return view;
  json doc;
  in >> doc;
  for (const auto& c : doc.at("cases")) view.cases[c.at("case_id").get<std::string>()] = c;
  view.ok = true;
  return view;
}

bool all_pass(const SuiteView& v, const std::vector<std::string>& ids, std::string& why) {
  for (const auto& id : ids) {
    if (!v.passed(id)) {
      why = "case " + id + " did not pass";
      return false;
    }
  }
  return true;
}

double total_millis(const SuiteView& v, const std::vector<std::string>& ids) {
  double t = 0;
  for (const auto& id : ids) t += v.millis(id);
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: qduo_acceptance <path-to-qduo-cli>\n");
    return 2;
  }
  const std::string cli = argv[1];
  const std::string rpt1 = "/tmp/qduo_acceptance_report1.json";
  const std::string rpt2 = "/tmp/qduo_acceptance_report2.json";

  // criterion 1: the 16-element local ring, under one second
  {
    Timer t;
    const bool ok = criterion1();
    const double ms = t.ms();
    report(1, ok && ms < 1000.0,
           "xuxu-local16: qnil = the 8 listed elements, local, xy = 2, (qnil)^2 != 0, "
           "right qnil-duo fails with a re-verifying witness, under 1 s",
           ms);
  }

  // criterion 2: L_(1,1)(Z_4), under thirty seconds
  {
    Timer t;
    const bool ok = criterion2();
    const double ms = t.ms();
    report(2, ok && ms < 30000.0,
           "l11-z4: not right qnil-duo; the displayed pair has B in qnil, BA matches, no C in qnil with "
           "BA = AC, under 30 s",
           ms);
  }

  // full CLI verify runs (also criterion 8)
  Timer verify_timer;
  const int rc1 = std::system((cli + " verify --catalog default --format json --out " + rpt1 +
                               " > /dev/null 2>&1")
                                  .c_str());
  const double verify_ms = verify_timer.ms();
  const int rc2 = std::system((cli + " verify --catalog default --format json --out " + rpt2 +
                               " > /dev/null 2>&1")
                                  .c_str());
  const SuiteView view = load_report(rpt1);

  // criterion 3: exhaustive characterization suites, under sixty seconds total
  {
    const std::vector<std::string> ids{"L4.2.1-L0t-qnil-a",    "L4.2.2-Ls0-qnil-f",
                                       "L4.2.3-L00-qnil-iff",  "L4.5.1-H-commutation",
                                       "L4.5.2-H-invertibility", "L4.5.3-H-qnil",
                                       "L4.7-K0-units-center"};
    std::string why;
    const bool ok = view.ok && all_pass(view, ids, why);
    const double ms = total_millis(view, ids);
    report(3, ok && ms < 60000.0,
           "L-family, H-family and K_0 characterizations exhaustively verified, under 60 s" +
               (why.empty() ? "" : " [" + why + "]"),
           ms);
  }

  // criterion 4: quasinilpotent algebra on every catalog ring
  {
    const std::vector<std::string> ids{"CAT.3-core-invariants", "P2.2.1-power-closure",
                                       "P2.2.3-qnil-swap",      "P2.2.4-qnil-conjugation",
                                       "P2.2.5-corner-qnil",    "T3.6.1-idempotent-defect",
                                       "P2.4-products"};
    std::string why;
    const bool ok = view.ok && all_pass(view, ids, why);
    report(4, ok,
           "J and N inside qnil, qnil avoids units, power closure, ab/ba swap, conjugation, "
           "idempotent defect, corner equality, product rule" +
               (why.empty() ? "" : " [" + why + "]"),
           total_millis(view, ids));
  }

  // criterion 5: implication suite with non-vacuous hypotheses
  {
    const std::vector<std::string> impl{"T3.6.2-qnil-duo-abelian", "T3.15.1-exchange-stable-range",
                                        "T3.15.2-regular-strongly-regular", "L3.central-qnil-duo",
                                        "T3.11-local-sqzero-qnil-duo"};
    std::string why;
    bool ok = view.ok && all_pass(view, impl, why) && view.passed("T3.5-product-qnil-duo");
    for (const auto& id : impl) {
      if (view.hypothesis_count(id) == 0) {
        ok = false;
        why = "hypothesis of " + id + " is vacuous on the catalog";
      }
    }
    report(5, ok,
           "qnil-duo implications (abelian, stable range 1, strongly regular, central-qnil, "
           "local square-zero) and product equivalence; every hypothesis non-vacuous" +
               (why.empty() ? "" : " [" + why + "]"),
           total_millis(view, impl));
  }

  // criterion 6: the Dorroh suite, under ten seconds
  {
    const std::vector<std::string> ids{"L2.5.1-dorroh-commutant", "L2.5.2-dorroh-inverse",
                                       "P2.6.1-dorroh-rqnil", "P2.6.2-dorroh-sqnil",
                                       "T2.7-dorroh-criterion"};
    std::string why;
    const bool ok = view.ok && all_pass(view, ids, why);
    const double ms = total_millis(view, ids);
    report(6, ok && ms < 10000.0,
           "Dorroh commutant and inverse lemmas, (R,0) equality, (0,S) inclusion, and the "
           "solvability criterion, exhaustive under 10 s" +
               (why.empty() ? "" : " [" + why + "]"),
           ms);
  }

  // criterion 7: series truncations: units exact, qnil inclusion exact, equality recorded
  {
    std::string why;
    bool ok = view.ok &&
              all_pass(view, {"L2.9-series-units", "P2.10-series-qnil-inclusion"}, why);
    auto it = view.cases.find("P2.10-series-qnil-equality");
    ok = ok && it != view.cases.end() && it->second.at("outcome") == "recorded";
    auto descent = view.cases.find("T3.19-series-descent");
    ok = ok && descent != view.cases.end() && descent->second.at("outcome") == "pass";
    std::string detail = "series: units = eps^-1(U) exactly, eps^-1(qnil) inside qnil, "
                         "equality recorded, descent evaluated";
    if (it != view.cases.end() && it->second.contains("detail"))
      detail += " [" + it->second.at("detail").get<std::string>() + "]";
    if (descent != view.cases.end())
      detail += " [descent hypothesis held on " +
                std::to_string(view.hypothesis_count("T3.19-series-descent")) + " instance(s)]";
    if (!why.empty()) detail += " [" + why + "]";
    report(7, ok, detail,
           total_millis(view, {"L2.9-series-units", "P2.10-series-qnil-inclusion",
                               "P2.10-series-qnil-equality", "T3.19-series-descent"}));
  }

  // criterion 8: full verify run: exit 0, under five minutes, byte-stable
  {
    bool ok = rc1 == 0 && rc2 == 0 && verify_ms < 300000.0;
    std::string note = "verify --catalog default: exit " + std::to_string(rc1) + "/" +
                       std::to_string(rc2);
    std::ifstream f1(rpt1), f2(rpt2);
    if (ok && f1 && f2) {
      json d1, d2;
      f1 >> d1;
      f2 >> d2;
      const std::string s1 = suite::stable_view(d1).dump();
      const std::string s2 = suite::stable_view(d2).dump();
      if (s1 != s2) {
        ok = false;
        note += "; reports differ modulo timings";
      } else {
        note += "; reports byte-identical modulo timings";
      }
    } else if (ok) {
      ok = false;
      note += "; report files missing";
    }
    report(8, ok, note + ", wall clock under 5 min", verify_ms);
  }

  if (g_failures != 0) {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 8 criteria passed\n");
  return 0;
}
