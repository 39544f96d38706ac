#include <doctest.h>

#include <json.hpp>

#include "qduo/descriptor.hpp"
#include "qduo/theorem_suite.hpp"

using namespace qduo;
using nlohmann::json;

TEST_CASE("every builtin descriptor builds and its canonical form round-trips") {
  for (const auto& name : rings::builtin_names()) {
    CAPTURE(name);
    auto r = rings::builtin(name);
    auto again = rings::build(json::parse(r->descriptor_json()));
    CHECK(again->order() == r->order());
    CHECK(again->name() == r->name());
    CHECK(again->descriptor_json() == r->descriptor_json());
  }
}

TEST_CASE("descriptor validation errors name the violated precondition") {
  CHECK_THROWS_WITH_AS(rings::build(json{{"kind", "nope"}}), doctest::Contains("unknown kind"),
                       std::invalid_argument);
  CHECK_NOTHROW(rings::build(json{{"schema", "qduo.ring/1"}, {"kind", "zn"}, {"n", 4}}));
  CHECK_THROWS_WITH_AS(rings::build(json{{"schema", "qduo.ring/9"}, {"kind", "zn"}, {"n", 4}}),
                       doctest::Contains("schema"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(rings::build(json{{"kind", "zn"}}), doctest::Contains("missing field"),
                       std::invalid_argument);
  CHECK_THROWS_AS(rings::build(json{{"kind", "zn"}, {"n", 1}}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      rings::build(json{{"kind", "lst"},
                        {"base", json{{"kind", "mn"}, {"base", json{{"kind", "zn"}, {"n", 2}}}, {"n", 2}}},
                        {"s", json::array({0, 1, 0, 0})},
                        {"t", 0}}),
      doctest::Contains("central"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      rings::build(json{{"kind", "hurwitz"},
                        {"base", json{{"kind", "zn"}, {"n", 4}}},
                        {"alpha", json::array({0, 3, 2, 1})},
                        {"k", 1}}),
      doctest::Contains("endomorphism"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(rings::build(json{{"kind", "dorroh"},
                                         {"algebra", json{{"kind", "zn"}, {"n", 4}}},
                                         {"n", 2}}),
                       doctest::Contains("exponent"), std::invalid_argument);
}

TEST_CASE("element literals") {
  auto xu = rings::builtin("xuxu-local16");
  CHECK(rings::parse_element(*xu, std::string("a=2,b=1,c=0")) == xu->encode({2, 1, 0}));
  CHECK(xu->label(rings::parse_element(*xu, std::string("a=2,b=1,c=0"))) == "2+x");
  CHECK(rings::parse_element(*xu, json::array({0, 1, 0})) == xu->encode({0, 1, 0}));
  CHECK(rings::parse_element(*xu, json{{"b", 1}}) == xu->encode({0, 1, 0}));

  auto z4 = rings::builtin("z4");
  CHECK(rings::parse_element(*z4, std::string("3")) == 3);
  CHECK(rings::parse_element(*z4, json(2)) == 2);

  CHECK_THROWS_WITH_AS(rings::parse_element(*xu, std::string("a=2,q=1")),
                       doctest::Contains("unknown coordinate"), std::invalid_argument);
  CHECK_THROWS_AS(rings::parse_element(*xu, std::string("a=7,b=0,c=0")), std::invalid_argument);
  CHECK_THROWS_AS(rings::parse_element(*z4, std::string("banana")), std::invalid_argument);
  // raw index form for multi-coordinate rings
  CHECK(rings::parse_element(*xu, json(6)) == 6);
  CHECK_THROWS_AS(rings::parse_element(*xu, json(99)), std::invalid_argument);
}

TEST_CASE("the default catalog builds completely under the cap") {
  const auto& cat = suite::default_catalog();
  CHECK(cat.size() == 37);
  bool has_xuxu = false;
  for (const auto& [id, desc] : cat) {
    CAPTURE(id);
    auto r = rings::build(desc);
    CHECK(r->order() >= 2);
    CHECK(r->order() <= rings::order_cap());
    has_xuxu = has_xuxu || id == "xuxu-local16";
  }
  CHECK(has_xuxu);
}

TEST_CASE("catalog digest is stable across two runs") {
  auto r1 = suite::run_all({{"a", rings::builtin_descriptor("z4")},
                            {"b", rings::builtin_descriptor("z6")}});
  auto r2 = suite::run_all({{"a", rings::builtin_descriptor("z4")},
                            {"b", rings::builtin_descriptor("z6")}});
  CHECK(r1.doc["catalog_digest"] == r2.doc["catalog_digest"]);
}

TEST_CASE("alpha given as an explicit image table") {
  // on Z_2 x Z_2 the coordinate swap is the table [0,2,1,3]
  const json base{{"kind", "product"},
                  {"factors", json::array({json{{"kind", "zn"}, {"n", 2}},
                                           json{{"kind", "zn"}, {"n", 2}}})}};
  auto by_name = rings::build(json{{"kind", "skewpower"}, {"base", base}, {"alpha", "swap"}, {"k", 2}});
  auto by_table = rings::build(
      json{{"kind", "skewpower"}, {"base", base}, {"alpha", json::array({0, 2, 1, 3})}, {"k", 2}});
  CHECK(by_table->order() == by_name->order());
  for (Elem x = 0; x < by_name->order(); x += 7)
    for (Elem y = 0; y < by_name->order(); y += 5)
      CHECK(by_name->mul(x, y) == by_table->mul(x, y));
  // the identity written out as a table is also accepted
  CHECK_NOTHROW(rings::build(json{{"kind", "hurwitz"},
                                  {"base", json{{"kind", "zn"}, {"n", 3}}},
                                  {"alpha", json::array({0, 1, 2})},
                                  {"k", 1}}));
}

TEST_CASE("table descriptors round-trip through JSON") {
  auto xu = rings::xuxu_local16();
  auto t = rings::export_tables(*xu);
  json desc{{"kind", "table"}, {"add", t.add}, {"mul", t.mul}};
  auto tr = rings::build(desc);
  CHECK(tr->order() == 16);
  CHECK(tr->qnil().members() == xu->qnil().members());
  auto again = rings::build(json::parse(tr->descriptor_json()));
  CHECK(again->name() == tr->name());
}
