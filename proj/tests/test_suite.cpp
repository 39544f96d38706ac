#include <doctest.h>

#include <set>

#include "qduo/descriptor.hpp"
#include "qduo/theorem_suite.hpp"

using namespace qduo;
using nlohmann::json;

TEST_CASE("registry ids are unique, sorted, and reference known inputs") {
  const auto& cases = suite::case_registry();
  CHECK(cases.size() >= 50);
  std::set<std::string> ids;
  std::set<std::string> catalog_ids;
  for (const auto& [id, desc] : suite::default_catalog()) catalog_ids.insert(id);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CHECK(ids.insert(cases[i].id).second);
    if (i > 0) CHECK(cases[i - 1].id < cases[i].id);
    CHECK_FALSE(cases[i].statement.empty());
    CHECK(cases[i].run != nullptr);
    for (const auto& input : cases[i].inputs) {
      INFO(cases[i].id << " input " << input);
      CHECK((input == "<catalog>" || catalog_ids.count(input) == 1));
    }
  }
}

TEST_CASE("individual cases behave as expected on a reduced catalog") {
  std::vector<std::pair<std::string, json>> cat;
  for (const char* id : {"z2", "z4", "z6", "xuxu-local16", "d3pattern-z4", "k0-z2",
                         "t2-z4-z4", "m2-z2"})
    cat.emplace_back(id, rings::builtin_descriptor(id));

  suite::CaseContext ctx;
  ctx.exec = kernels::default_exec();
  for (const auto& [id, desc] : cat) ctx.rings.emplace(id, rings::build(desc));

  auto find = [&](const std::string& id) -> const suite::TheoremCase& {
    for (const auto& c : suite::case_registry())
      if (c.id == id) return c;
    FAIL("case not found: " << id);
    throw std::logic_error("unreachable");
  };

  SUBCASE("the xuxu example passes") {
    auto r = find("EX3.12.3-xuxu").run(ctx);
    CHECK(r.outcome == suite::Outcome::pass);
  }
  SUBCASE("the pattern-ring square observation is recorded, not asserted") {
    auto r = find("EX3.12.2-d3pattern-sqzero").run(ctx);
    CHECK(r.outcome == suite::Outcome::recorded);
    CHECK(r.detail.find("does not hold") != std::string::npos);
  }
  SUBCASE("the degenerate descent case is registered as skipped") {
    auto r = find("T3.14-d2-domain-descent").run(ctx);
    CHECK(r.outcome == suite::Outcome::skipped_degenerate);
  }
  SUBCASE("catalog-wide implications report hypothesis counts") {
    auto r = find("L3.central-qnil-duo").run(ctx);
    CHECK(r.outcome == suite::Outcome::pass);
    CHECK(r.hypothesis_count >= 3);  // the commutative members at least
  }
  SUBCASE("missing inputs raise a skip that run_all records") {
    try {
      find("EX4.4-L11Z4-not-right-qnil-duo").run(ctx);
      FAIL("expected a skip for the missing l11-z4 input");
    } catch (const suite::CaseContext::Skip& skip) {
      CHECK(skip.reason.find("l11-z4") != std::string::npos);
    }
    auto r = suite::run_case(find("EX4.4-L11Z4-not-right-qnil-duo"), ctx);
    CHECK(r.outcome == suite::Outcome::skipped_error);
    CHECK(r.detail.find("l11-z4") != std::string::npos);
  }
  SUBCASE("run_case executes available cases directly") {
    auto r = suite::run_case(find("L4.7-K0-units-center"), ctx);
    CHECK(r.outcome == suite::Outcome::skipped_error);  // only k0-z2 present, k0-z4 missing
    suite::CaseContext full = ctx;
    full.rings.emplace("k0-z4", rings::builtin("k0-z4"));
    CHECK(suite::run_case(find("L4.7-K0-units-center"), full).outcome == suite::Outcome::pass);
  }
}

TEST_CASE("run_all marks invalid catalog entries and exits nonzero") {
  std::vector<std::pair<std::string, json>> cat;
  cat.emplace_back("z4", rings::builtin_descriptor("z4"));
  cat.emplace_back("broken", json{{"kind", "zn"}, {"n", 1}});
  auto report = suite::run_all(cat);
  CHECK_FALSE(report.complete);
  CHECK(report.exit_code() != 0);
  bool found_error = false;
  for (const auto& entry : report.doc["catalog"])
    if (entry.contains("error")) found_error = true;
  CHECK(found_error);
  // cases relying on missing rings are skipped with a reason
  bool found_skip = false;
  for (const auto& c : report.doc["cases"])
    if (c["outcome"] == "skipped-error") found_skip = true;
  CHECK(found_skip);
  CHECK(report.to_text().find("INCOMPLETE") != std::string::npos);
}

TEST_CASE("stable_view strips volatile fields") {
  auto report = suite::run_all({{"z4", rings::builtin_descriptor("z4")}});
  auto view = suite::stable_view(report.doc);
  for (const auto& c : view["cases"]) CHECK_FALSE(c.contains("millis"));
  CHECK(view.contains("catalog_digest"));
}
