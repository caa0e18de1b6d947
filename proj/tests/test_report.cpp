#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "uqpa/report.hpp"

using namespace uqpa;

TEST_CASE("single relation as json") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.ps = {2};
  cfg.relations = {"eq7"};
  auto r = build_report(cfg);
  CHECK(r.exit_code == kExitOk);
  auto doc = nlohmann::json::parse(r.text);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["relation_id"] == "eq7");
  CHECK(doc[0]["p"] == 2);
  CHECK(doc[0]["strands"] == 3);
  CHECK(doc[0]["holds"] == true);
  CHECK(doc[0].contains("elapsed_ms"));
  CHECK_FALSE(doc[0].contains("witness"));
}

TEST_CASE("failures carry a witness and exit 1") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.ps = {2};
  cfg.relations = {"eq13"};
  auto r = build_report(cfg);
  CHECK(r.exit_code == kExitFailure);
  auto doc = nlohmann::json::parse(r.text);
  CHECK(doc[0]["holds"] == false);
  CHECK(doc[0]["witness"]["input"] == "v000");
}

TEST_CASE("skip-only runs exit 3") {
  RunConfig cfg;
  cfg.command = Command::Verify;
  cfg.ps = {3};
  cfg.relations = {"eq4", "eq5"};
  cfg.budget = 64;
  auto r = build_report(cfg);
  CHECK(r.exit_code == kExitSkipOnly);
  CHECK(r.executed == 0);
  CHECK(r.skipped == 2);
  auto doc = nlohmann::json::parse(r.text);
  CHECK(doc[0]["holds"].is_null());
  CHECK(doc[0]["skipped"] == true);
}

TEST_CASE("invalid configs are usage errors") {
  RunConfig cfg;
  cfg.ps = {1};
  CHECK(build_report(cfg).exit_code == kExitUsage);
  cfg.ps = {2};
  cfg.relations = {"eq0"};
  CHECK(build_report(cfg).exit_code == kExitUsage);
  cfg.relations = {};
  cfg.max_n = 0;
  CHECK(build_report(cfg).exit_code == kExitUsage);
}

TEST_CASE("dims table") {
  RunConfig cfg;
  cfg.command = Command::Dims;
  cfg.ps = {3};
  cfg.max_n = 6;
  auto r = build_report(cfg);
  CHECK(r.exit_code == kExitOk);
  auto doc = nlohmann::json::parse(r.text);
  REQUIRE(doc.size() == 6);
  CHECK(doc[3]["fusion"] == 14);
  CHECK(doc[5]["fusion"] == 162);
  CHECK(doc[5]["oracle"] == 162);
  for (const auto& row : doc) CHECK(row["prediction_holds"] == true);
}

TEST_CASE("conjecture table is deterministic and complete") {
  RunConfig cfg;
  cfg.command = Command::Conjecture;
  cfg.ps = {2};
  cfg.oracle_max_n = 4;
  cfg.format = Format::Csv;
  auto a = build_report(cfg), b = build_report(cfg);
  CHECK(a.text == b.text);
  CHECK(a.exit_code == kExitOk);
  cfg.format = Format::Json;
  auto doc = nlohmann::json::parse(build_report(cfg).text);
  REQUIRE(doc.size() == 10);
  CHECK(doc[2]["conjecture_floor-euclidean"] == 29);
  CHECK(doc[2]["conjecture_truncate-toward-zero"] == 53);
  CHECK(doc[2]["conjecture_zero-for-negative-index"] == 5);
  CHECK(doc[2]["fusion"] == 8);
  CHECK(doc[9]["oracle"].is_null());
}

TEST_CASE("formats") {
  RunConfig cfg;
  cfg.command = Command::Hom;
  cfg.ps = {2};
  cfg.format = Format::Markdown;
  auto md = build_report(cfg);
  CHECK(md.exit_code == kExitOk);
  CHECK(md.text.find("## hom") != std::string::npos);
  CHECK(md.text.find("| p | source | target |") != std::string::npos);
  cfg.format = Format::Csv;
  auto csv = build_report(cfg);
  CHECK(csv.text.find("# maps") != std::string::npos);
  CHECK(parse_format("md") == Format::Markdown);
  CHECK_FALSE(parse_format("xml"));
  CHECK(parse_command("basis") == Command::Basis);
}
