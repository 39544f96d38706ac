#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

// End-to-end checks against the real binary. The path comes from the QDUO_CLI
// environment variable (set by ctest); without it these tests are skipped.

namespace {

using nlohmann::json;

const char* cli_path() { return std::getenv("QDUO_CLI"); }

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli: compute, check, explain, verify" * doctest::skip(cli_path() == nullptr)) {
  SUBCASE("compute renders the xuxu quasinilpotents") {
    auto r = run("compute --ring builtin:xuxu-local16 --sets qnil --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["schema"] == "qduo.sets/1");
    CHECK(doc["sets"]["qnil"]["count"] == 8);
    std::set<std::string> got;
    for (const auto& e : doc["sets"]["qnil"]["elements"]) got.insert(e.get<std::string>());
    const std::set<std::string> want{"0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"};
    CHECK(got == want);
  }
  SUBCASE("compute from a descriptor file") {
    const std::string path = "/tmp/qduo_test_zn4.json";
    std::ofstream(path) << R"({"kind":"zn","n":4})";
    auto r = run("compute --ring " + path + " --sets units,jacobson --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["sets"]["units"]["elements"] == json::array({"1", "3"}));
    CHECK(doc["sets"]["jacobson"]["elements"] == json::array({"0", "2"}));
  }
  SUBCASE("unknown set names are rejected before computation") {
    auto r = run("compute --ring builtin:z4 --sets unit");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown set") != std::string::npos);
  }
  SUBCASE("invalid descriptors exit nonzero with the validation message") {
    const std::string path = "/tmp/qduo_test_bad.json";
    std::ofstream(path) << R"({"kind":"zn","n":1})";
    auto r = run("compute --ring " + path + " --sets units");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("modulus") != std::string::npos);
  }
  SUBCASE("compute comm with an element literal") {
    auto r = run("compute --ring builtin:m2-z2 --sets comm,comm2 --element "
                 "a11=1,a12=0,a21=0,a22=0 --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["element"] == "[[1,0],[0,0]]");
    CHECK(doc["sets"]["comm"]["count"] == 4);
    CHECK(doc["sets"]["comm2"]["count"] == 4);
  }
  SUBCASE("check from a descriptor file: Z_6 is regular and strongly regular") {
    const std::string path = "/tmp/qduo_test_zn6.json";
    std::ofstream(path) << R"({"kind":"zn","n":6})";
    auto r = run("check --ring " + path + " --props regular,strongly-regular --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["props"]["regular"]["holds"] == true);
    CHECK(doc["props"]["strongly-regular"]["holds"] == true);
  }
  SUBCASE("check reports witnesses") {
    auto r = run("check --ring builtin:m2-z2 --props abelian --witness --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc["props"]["abelian"]["holds"] == false);
    CHECK(doc["props"]["abelian"]["witness"]["parts"].size() == 2);
  }
  SUBCASE("check rejects unknown properties") {
    auto r = run("check --ring builtin:z4 --props qnil-duo-ish");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown property") != std::string::npos);
  }
  SUBCASE("explain prints the construction formula and encoding") {
    auto r = run("explain --ring builtin:k0-z2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("generalized matrices") != std::string::npos);
    CHECK(r.output.find("coordinates: a b c d") != std::string::npos);
  }
  SUBCASE("verify with an invalid catalog exits nonzero and lists skip reasons") {
    const std::string path = "/tmp/qduo_test_cat.json";
    std::ofstream(path) << R"([{"kind":"zn","n":4},{"kind":"zn","n":1}])";
    auto r = run("verify --catalog " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("build-error") != std::string::npos);
    CHECK(r.output.find("INCOMPLETE") != std::string::npos);
  }
  SUBCASE("serial and parallel agree end to end") {
    auto a = run("--exec serial compute --ring builtin:h11-z4 --sets qnil --format json");
    auto b = run("--exec parallel compute --ring builtin:h11-z4 --sets qnil --format json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(json::parse(a.output) == json::parse(b.output));
  }
}
