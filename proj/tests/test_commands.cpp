#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "dpcover/commands.hpp"
#include "dpcover/formulas.hpp"

using namespace dpcover;
using nlohmann::json;

TEST_CASE("verify-k4 small table") {
  VerifyK4Options o;
  o.m_max = 5;
  const CommandOutcome out = cmd_verify_k4(o);
  CHECK(out.ok);
  CHECK(out.exit_code == 0);
  const json& rows = out.payload["rows"];
  REQUIRE(rows.size() == 4);
  const std::vector<int> max{2, 12, 60, 182};
  const std::vector<int> min{0, 0, 24, 120};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rows[i]["value"] == max[i]);
    CHECK(rows[i]["min"] == min[i]);
    CHECK(rows[i]["pass"] == true);
  }
  CHECK(render(out, OutputFormat::kTable) ==
        "When m = 2:\n2\n0\n\nWhen m = 3:\n12\n0\n\nWhen m = 4:\n60\n24\n\n"
        "When m = 5:\n182\n120\n");
  const std::string csv = render(out, OutputFormat::kCsv);
  CHECK(csv.rfind("m,method,value,min,expected,pass\n", 0) == 0);
}

TEST_CASE("verify-k4 extends to large m through constructions") {
  VerifyK4Options o;
  o.m_max = 40;
  const CommandOutcome out = cmd_verify_k4(o);
  CHECK(out.ok);
  CHECK(out.payload["all_pass"] == true);
  CHECK(out.payload["rows"].size() == 39);
  CHECK(out.payload["rows"][4]["value"] == 462);
  CHECK(out.payload["rows"][4]["min"].is_null());
  o.m_max = 1;
  const CommandOutcome bad = cmd_verify_k4(o);
  CHECK_FALSE(bad.ok);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("search command") {
  SearchOptions o;
  o.m = 3;
  CommandOutcome out = cmd_search(o);
  CHECK(out.ok);
  CHECK(out.payload["max"] == 12);
  CHECK(out.payload["min"] == 0);
  CHECK(out.payload["min_kind"] == "full-cover minimum");

  o.m = 4;
  o.reduction = Reduction::kConjugacy;
  out = cmd_search(o);
  CHECK(out.payload["max"] == 60);
  CHECK(out.payload["min"] == 24);

  SearchOptions k5;
  k5.graph = "K5";
  k5.m = 3;
  k5.mode = SearchMode::kMax;
  const CommandOutcome a = cmd_search(k5);
  const CommandOutcome b = cmd_search(k5);
  CHECK(a.ok);
  CHECK(a.payload["max"] == b.payload["max"]);
  CHECK(a.payload["argmax_cover"] == b.payload["argmax_cover"]);

  SearchOptions big;
  big.m = 5;
  big.budget = 1000;
  const CommandOutcome limited = cmd_search(big);
  CHECK_FALSE(limited.ok);
  CHECK(limited.error_code == "resource-limit");
  CHECK(limited.exit_code == 4);

  SearchOptions sampled;
  sampled.m = 4;
  sampled.samples = 100;
  CHECK(cmd_search(sampled).exit_code == 2);
  sampled.seed = 1;
  CHECK(cmd_search(sampled).ok);
}

TEST_CASE("count command") {
  CountOptions o;
  o.construct = "even-pairing";
  o.m = 6;
  o.counter = "all";
  CommandOutcome out = cmd_count(o);
  CHECK(out.ok);
  CHECK(out.payload["value"] == 462);
  CHECK(out.payload["agree"] == true);

  CountOptions canon;
  canon.construct = "canonical";
  canon.m = 5;
  CHECK(cmd_count(canon).payload["value"] == 120);

  const std::string path = "test_commands_bad.json";
  {
    std::ofstream f(path);
    f << R"({"m": 3, "perms": {"1-2": [1, 1, 3]}})";
  }
  CountOptions bad;
  bad.cover_file = path;
  bad.graph = "K2";
  const CommandOutcome rejected = cmd_count(bad);
  std::remove(path.c_str());
  CHECK_FALSE(rejected.ok);
  CHECK(rejected.exit_code == 2);
  CHECK(rejected.error_code == "invalid-input");

  CountOptions neither;
  CHECK(cmd_count(neither).exit_code == 2);
  CountOptions random;
  random.construct = "random";
  CHECK(cmd_count(random).exit_code == 2);
}

TEST_CASE("signed command") {
  SignedOptions o;
  o.lambda = 4;
  o.compare_dual = true;
  CommandOutcome out = cmd_signed(o);
  CHECK(out.payload["value"] == 60);
  CHECK(out.payload["equal"] == true);
  o.lambda = 2;
  CHECK(cmd_signed(o).payload["value"] == 2);
  o.lambda = 10;
  out = cmd_signed(o);
  CHECK(out.payload["value"] == 5370);
  CHECK(out.payload["dual_k4"] == 5370);
}

TEST_CASE("bounds command") {
  BoundsOptions o;
  o.n = 4;
  o.m = 100;
  CommandOutcome out = cmd_bounds(o);
  CHECK(out.ok);
  CHECK(out.payload["threshold_cleared"] == false);
  CHECK(out.payload.contains("notice"));

  o.m = 134;
  o.check_construction = true;
  out = cmd_bounds(o);
  CHECK(out.payload["threshold_cleared"] == true);
  CHECK(out.payload["within_bounds"] == true);
  CHECK(out.payload["dual_k4"] == out.payload["construction_count"]);

  o.n = 5;
  o.m = 2059;
  out = cmd_bounds(o);
  CHECK(out.payload["threshold"] == 2057);
  CHECK(out.payload["threshold_cleared"] == true);
  CHECK(out.payload["within_bounds"] == true);
  CHECK(out.payload["triangle_free"] == true);
}

TEST_CASE("construct command and JSON envelope") {
  ConstructOptions o;
  o.kind = "odd-k4";
  o.m = 5;
  const CommandOutcome out = cmd_construct(o);
  CHECK(out.ok);
  CHECK(out.payload["perms"]["3-4"] == json::parse("[3, 1, 2, 5, 4]"));
  const json env = json::parse(render(out, OutputFormat::kJson));
  CHECK(env["status"] == "ok");
  CHECK(env["payload"] == out.payload);

  o.kind = "nonsense";
  const CommandOutcome bad = cmd_construct(o);
  CHECK(bad.exit_code == 2);
  const json err = json::parse(render(bad, OutputFormat::kJson));
  CHECK(err["error"]["code"] == "invalid-input");
}
