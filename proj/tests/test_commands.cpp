#include "sureloss/commands.hpp"
#include "sureloss/errors.hpp"

#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace sureloss;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string test_data(const std::string& name) { return std::string(SURELOSS_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check-asl on the Euro 2016 market") {
  const auto r = invoke({"check-asl", testing::data_path("euro2016.csv")});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("scope") == "market");
  CHECK(j.at("avoids_sure_loss") == true);
  CHECK(j.at("total").at("decimal") == "1.0349");
  CHECK(j.at("total").at("exact") == "47180266895901554588011/45587877429454591664160");
  CHECK(j.at("outcomes").size() == 24);
  CHECK(j.at("bookmakers") == 27);
}

TEST_CASE("check-asl for one bookmaker") {
  const auto r = invoke({"check-asl", testing::data_path("three_bookmakers.csv"), "--bookmaker", "Forest"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("scope") == "bookmaker");
  CHECK(j.at("total").at("exact") == "137/126");
  CHECK(j.at("outcomes")[0].contains("witness"));

  const auto table = invoke({"check-asl", testing::data_path("three_bookmakers.csv"), "--format", "table"});
  CHECK(table.code == cli::kOk);
  CHECK(table.out.find("avoids sure loss") != std::string::npos);
}

TEST_CASE("find-coupon-arbitrage on Bet2") {
  const auto r = invoke({"find-coupon-arbitrage", testing::data_path("euro2016.csv"), "--bookmaker", "Bet2", "--all"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("evaluated") == 552);
  CHECK(j.at("coupons").size() == 552);
  CHECK(j.at("exploitable_count") == 4);
  CHECK(j.at("message") == "sure gain available");
  const auto& s = j.at("strategy");
  CHECK(s.at("first") == "France");
  CHECK(s.at("coupon") == "Germany");
  CHECK(s.at("guaranteed_gain").at("decimal") == "0.2093");
  CHECK(s.at("certificate").at("status") == "verified");
  CHECK(j.at("coupons")[1].at("upper").at("decimal") == "-0.0950");
}

TEST_CASE("find-coupon-arbitrage on the Forest bookmaker") {
  const auto r = invoke({"find-coupon-arbitrage", testing::data_path("three_bookmakers.csv"), "--bookmaker", "Forest"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK_FALSE(j.contains("coupons"));
  CHECK(j.at("strategy").at("guaranteed_gain").at("exact") == "47/21");
  CHECK(j.at("strategy").at("first") == "D");
  CHECK(j.at("strategy").at("coupon") == "L");

  const auto capped = json::parse(invoke({"find-coupon-arbitrage", testing::data_path("three_bookmakers.csv"),
                                          "--bookmaker", "Forest", "--max-coupon", "4"})
                                      .out);
  CHECK(capped.at("evaluated") == 2);
  CHECK(capped.at("skipped").size() == 4);
  CHECK(capped.at("strategy").at("first") == "W");
}

TEST_CASE("coupon search outcomes for small tables") {
  const auto margin = invoke({"find-coupon-arbitrage", test_data("margin.csv"), "--bookmaker", "Tight"});
  REQUIRE(margin.code == cli::kOk);
  const auto j = json::parse(margin.out);
  CHECK(j.at("strategy").is_null());
  CHECK(j.at("message") == "no exploitable coupon");

  const auto evens = invoke({"find-coupon-arbitrage", test_data("evens.csv"), "--bookmaker", "Evens"});
  REQUIRE(evens.code == cli::kOk);
  CHECK(json::parse(evens.out).at("strategy").at("alpha").at("exact") == "-1/2");

  const auto generous = invoke({"find-coupon-arbitrage", test_data("generous.csv"), "--bookmaker", "Generous"});
  CHECK(generous.code == cli::kBaseSureLoss);
  CHECK(generous.err.find("sure loss") != std::string::npos);
}

TEST_CASE("natural-extension") {
  const auto r = invoke({"natural-extension", testing::data_path("three_bookmakers.csv"), "--bookmaker", "Forest",
                         "--gamble", "5,-13,-11"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j.at("upper").at("exact") == "-47/21");
  CHECK(j.at("lower").at("exact") == "-80/21");
  CHECK(j.at("decomposition").at("levels").size() == 2);

  const auto constant = json::parse(invoke({"natural-extension", testing::data_path("three_bookmakers.csv"),
                                            "--bookmaker", "Forest", "--gamble", "2,2,2"})
                                        .out);
  CHECK(constant.at("upper").at("exact") == "2/1");
  CHECK(constant.at("lower").at("exact") == "2/1");

  const auto indicator = json::parse(invoke({"natural-extension", testing::data_path("three_bookmakers.csv"),
                                             "--bookmaker", "Forest", "--gamble", "1,0,0"})
                                         .out);
  CHECK(indicator.at("upper").at("exact") == "4/7");
  CHECK(indicator.at("lower").at("exact") == "61/126");

  CHECK(invoke({"natural-extension", testing::data_path("three_bookmakers.csv"), "--bookmaker", "Forest", "--gamble",
                "1,2"})
            .code == cli::kUsage);
}

TEST_CASE("usage and input errors exit with 1") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"check-asl"}).code == cli::kUsage);
  CHECK(invoke({"check-asl", test_data("empty.csv")}).code == cli::kUsage);
  CHECK(invoke({"check-asl", test_data("does-not-exist.csv")}).code == cli::kUsage);
  CHECK(invoke({"check-asl", testing::data_path("euro2016.csv"), "--bookmaker", "Nobody"}).code == cli::kUsage);
  CHECK(invoke({"check-asl", testing::data_path("euro2016.csv"), "--format", "xml"}).code == cli::kUsage);
  CHECK(invoke({"find-coupon-arbitrage", testing::data_path("euro2016.csv"), "--bookmaker", "Bet2", "--max-coupon",
                "0"})
            .code == cli::kUsage);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("convert-wide reproduces the long file") {
  const auto r = invoke({"convert-wide", testing::data_path("euro2016_wide.csv")});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  CHECK(parse_odds_csv(in) == testing::euro2016());
}
