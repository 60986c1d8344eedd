#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulercf/cli.hpp"

using eulercf::Check;
using eulercf::exit_code_for;
using eulercf::kExitOk;
using eulercf::kExitPrecondition;
using eulercf::kExitUsage;
using eulercf::kExitVerifyFailed;
using eulercf::Report;
using eulercf::run_cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("repeated runs are byte-identical") {
  for (const char* format : {"text", "csv", "json"}) {
    std::vector<std::string> args{"sum", "--m", "1", "--n", "1", "--x", "1",
                                  "--depth", "12", "--format", format};
    Run first = cli(args);
    Run second = cli(args);
    CHECK(first.code == kExitOk);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("all three formats carry the same cells") {
  std::vector<std::string> base{"brouncker", "--preset", "odds", "--depth", "3"};
  auto with_format = [&](const char* f) {
    auto args = base;
    args.insert(args.end(), {"--format", f});
    return cli(args);
  };
  Run text = with_format("text");
  Run csv = with_format("csv");
  Run json = with_format("json");
  REQUIRE(json.code == kExitOk);

  nlohmann::json doc = nlohmann::json::parse(json.out);
  for (const auto& row : doc["rows"])
    for (const auto& [key, cell] : row.items()) {
      CHECK(text.out.find(cell.get<std::string>()) != std::string::npos);
      CHECK(csv.out.find(cell.get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("json reports always carry the full schema") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"sum", "--a", "1", "--b", "1", "--format", "json"},
           {"convergents", "--m", "1", "--n", "2", "--x", "1", "--depth", "4", "--format", "json"},
           {"contract", "--a", "1", "--b", "1", "--depth", "4", "--format", "json"},
           {"brouncker", "--r", "1,3/2,2", "--depth", "3", "--format", "json"},
           {"verify", "--max-r", "2", "--cap", "6", "--format", "json"}}) {
    Run run = cli(args);
    CAPTURE(args[0]);
    CHECK(run.code == kExitOk);
    nlohmann::json doc = nlohmann::json::parse(run.out);
    for (const char* key : {"command", "inputs", "rows", "oracle", "checks"})
      CHECK(doc.contains(key));
    CHECK(doc["command"].get<std::string>() == args[0]);
    for (const auto& check : doc["checks"]) {
      CHECK(check["pass"].is_boolean());
      CHECK(check["pass"].get<bool>());
    }
  }
}

TEST_CASE("telescoping table shows the exact partial-sum match") {
  Run run = cli({"brouncker", "--preset", "odds", "--depth", "3", "--format", "json"});
  REQUIRE(run.code == kExitOk);
  nlohmann::json doc = nlohmann::json::parse(run.out);
  REQUIRE(doc["rows"].size() == 3);
  const auto& last = doc["rows"][2];
  CHECK(last["convergent"].get<std::string>() == "13/15");
  CHECK(last["partial_sum"].get<std::string>() == "13/15");
  CHECK(last["equal"].get<std::string>() == "true");
}

TEST_CASE("bracketing run agrees with the integral oracle") {
  Run run = cli({"sum", "--m", "1", "--n", "1", "--x", "1", "--depth", "40",
                 "--format", "json"});
  REQUIRE(run.code == kExitOk);
  nlohmann::json doc = nlohmann::json::parse(run.out);
  CHECK(doc["checks"][0]["name"].get<std::string>() == "oracle_in_bracket");
  CHECK(doc["checks"][0]["pass"].get<bool>());
  CHECK(doc["oracle"]["method"].get<std::string>() == "quadrature");
}

TEST_CASE("a stalled fraction prints its fixed point") {
  Run run = cli({"convergents", "--a", "1", "--b", "0", "--depth", "5", "--format", "json"});
  REQUIRE(run.code == kExitOk);
  nlohmann::json doc = nlohmann::json::parse(run.out);
  REQUIRE(doc["rows"].size() == 5);
  for (std::size_t d = 2; d <= 5; ++d) {
    CHECK(doc["rows"][d - 1]["value"].get<std::string>() == "1/2");
    CHECK(doc["rows"][d - 1]["error"].get<std::string>() == "0");
  }
  CHECK(doc["oracle"]["method"].get<std::string>() == "closed_form");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({"sum", "--bogus"}).code == kExitUsage);
  CHECK(cli({"nonsense"}).code == kExitUsage);
  CHECK(cli({"sum"}).code == kExitUsage);                                   // no parameter group
  CHECK(cli({"sum", "--m", "1", "--n", "1", "--x", "1", "--a", "1", "--b", "1"}).code ==
        kExitUsage);                                                        // both groups
  CHECK(cli({"sum", "--m", "1", "--x", "1"}).code == kExitUsage);           // incomplete group
  CHECK(cli({"sum", "--a", "1", "--b", "1", "--tol", "abc"}).code == kExitUsage);
  CHECK(cli({"sum", "--a", "1", "--b", "1", "--tol", "-1"}).code == kExitUsage);
  CHECK(cli({"sum", "--a", "x", "--b", "1"}).code == kExitUsage);           // malformed rational
  CHECK(cli({"brouncker"}).code == kExitUsage);
  CHECK(cli({"brouncker", "--preset", "odds", "--r", "1,2"}).code == kExitUsage);
  CHECK(cli({"brouncker", "--preset", "evens"}).code == kExitUsage);
  CHECK(cli({"verify", "--cap", "1"}).code == kExitUsage);

  Run bad = cli({"sum", "--bogus"});
  CHECK(!bad.err.empty());
  CHECK(bad.out.empty());
}

TEST_CASE("refused computations exit with 3") {
  CHECK(cli({"sum", "--a", "1", "--b", "1", "--depth", "1"}).code == kExitPrecondition);
  CHECK(cli({"brouncker", "--r", "2,1"}).code == kExitPrecondition);
  CHECK(cli({"sum", "--m", "0", "--n", "1", "--x", "1"}).code == kExitPrecondition);
}

TEST_CASE("failed checks map to exit 4") {
  Report report;
  report.checks.push_back(Check{"oracle_in_bracket", true});
  CHECK(exit_code_for(report) == kExitOk);
  report.checks.push_back(Check{"even_convergents_product_one", false});
  CHECK(exit_code_for(report) == kExitVerifyFailed);
}

TEST_CASE("help is a successful run") {
  Run run = cli({"--help"});
  CHECK(run.code == kExitOk);
  CHECK(run.out.find("eulercf") != std::string::npos);
}
