#include "sureloss/errors.hpp"
#include "sureloss/sure_loss.hpp"

#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace sureloss;

namespace {

OddsTable two_way(const std::string& a, const std::string& b, const std::string& name = "Book") {
  return OddsTable(name, OutcomeSpace({"H", "A"}), {FractionalOdds::parse(a), FractionalOdds::parse(b)});
}

}  // namespace

TEST_CASE("upper pmf from odds is b/(a+b)") {
  const auto pbar = upper_pmf_from_odds(testing::forest());
  CHECK(pbar.bounds() == std::vector<Rational>{Rational(4, 7), Rational(5, 18), Rational(5, 21)});
  CHECK(upper_pmf_from_odds(two_way("0/1", "5"))[0] == Rational(1));
  CHECK(upper_pmf_from_odds(testing::bet2())[0] == Rational(1, 4));
}

TEST_CASE("single bookmaker verdicts") {
  const auto forest = check_asl_single(testing::forest());
  CHECK(forest.avoids);
  CHECK(forest.total == Rational(137, 126));
  CHECK(forest.total.to_decimal(3) == "1.087");

  const auto boundary = check_asl_single(two_way("1/1", "1/1"));
  CHECK(boundary.avoids);
  CHECK(boundary.total == Rational(1));

  const auto generous = check_asl_single(two_way("2/1", "2/1"));
  CHECK_FALSE(generous.avoids);
  CHECK(generous.total == Rational(2, 3));
  CHECK_FALSE(generous.witness.has_value());
  // Backing both outcomes once loses the bookmaker 1 whatever happens.
  const auto table = two_way("2/1", "2/1");
  const Gamble both = table.gamble(0) + table.gamble(1);
  CHECK(both == Gamble{-1, -1});
}

TEST_CASE("witness is a pmf that makes every gamble acceptable") {
  for (const auto& table : {testing::forest(), testing::bet2(), two_way("1/1", "1/1")}) {
    const auto verdict = check_asl_single(table);
    REQUIRE(verdict.witness);
    CHECK_NOTHROW(require_pmf(*verdict.witness));
    for (std::size_t w = 0; w < table.size(); ++w) CHECK(expectation_sign_check(table.gamble(w), *verdict.witness));
  }
}

TEST_CASE("over-round margin") {
  CHECK(over_round(testing::forest()) == Rational(1100, 126));
  CHECK(over_round(two_way("1/1", "1/1")) == Rational(0));
  const auto euro = over_round(max_odds(testing::euro2016()));
  CHECK(euro.to_decimal(2) == "3.49");
}

TEST_CASE("maximum odds across bookmakers") {
  const auto market = testing::three_bookmakers();
  const auto best = max_odds(market);
  CHECK(best.odds(0) == FractionalOdds::parse("17/20"));
  CHECK(best.odds(1) == FractionalOdds::parse("14/5"));
  CHECK(best.odds(2) == FractionalOdds::parse("10/3"));
  CHECK(max_odds_sources(market) == std::vector<std::size_t>{1, 1, 0});

  const Market single(testing::wdl(), {testing::forest()});
  CHECK(max_odds(single) == testing::forest());
}

TEST_CASE("maximum odds ties keep the first bookmaker") {
  const Market market(OutcomeSpace({"H", "A"}), {two_way("2/1", "1/1", "First"), two_way("4/2", "3/1", "Second")});
  CHECK(max_odds_sources(market) == std::vector<std::size_t>{0, 1});
  CHECK(max_odds(market).odds(0) == FractionalOdds::parse("2/1"));
}

TEST_CASE("maximum odds for the Euro 2016 market") {
  const auto euro = testing::euro2016();
  const auto best = max_odds(euro);
  const std::vector<std::pair<std::string, std::string>> expected{
      {"France", "10/3"},        {"Germany", "23/5"},      {"Spain", "5"},        {"England", "9"},
      {"Belgium", "57/5"},       {"Italy", "91/5"},        {"Portugal", "20"},    {"Croatia", "27"},
      {"Austria", "45"},         {"Poland", "50"},         {"Switzerland", "66"}, {"Russia", "85"},
      {"Turkey", "94"},          {"Wales", "100"},         {"Ukraine", "100"},    {"Sweden", "104"},
      {"Czech Republic", "135"}, {"Slovakia", "150"},      {"Rep of Ireland", "170"},
      {"Iceland", "180"},        {"Romania", "275"},       {"N Ireland", "400"},  {"Hungary", "566"},
      {"Albania", "531"}};
  REQUIRE(best.size() == expected.size());
  for (const auto& [label, odds] : expected) {
    CAPTURE(label);
    CHECK(best.odds(euro.space().index_of(label)).ratio() == FractionalOdds::parse(odds).ratio());
  }
}

TEST_CASE("market verdicts") {
  const auto table1 = check_asl_market(testing::three_bookmakers());
  CHECK(table1.avoids);
  CHECK(table1.total == Rational(20, 37) + Rational(5, 19) + Rational(3, 13));
  CHECK(table1.total.to_decimal(3) == "1.034");

  const auto euro = check_asl_market(testing::euro2016());
  CHECK(euro.avoids);
  CHECK(euro.total.to_decimal(4) == "1.0349");
}

TEST_CASE("market reduction uses the best odds, not any single bookmaker") {
  // Each bookmaker keeps a margin on its own, yet combining their best
  // prices leaves a sure gain for the customer.
  const Market market(OutcomeSpace({"H", "A"}), {two_way("2/1", "1/4", "Left"), two_way("1/4", "2/1", "Right")});
  for (const auto& table : market.tables()) CHECK(check_asl_single(table).avoids);
  const auto verdict = check_asl_market(market);
  CHECK_FALSE(verdict.avoids);
  CHECK(verdict.total == Rational(2, 3));

  std::vector<std::vector<Rational>> gambles;
  for (const auto& table : market.tables())
    for (std::size_t w = 0; w < 2; ++w) gambles.push_back(table.gamble(w).payoffs());
  CHECK_FALSE(testing::feasible_pmf(gambles, 2).has_value());

  const Market fair(OutcomeSpace({"H", "A"}), {two_way("1/2", "1/3", "Tight"), two_way("1/2", "1/5", "Other")});
  const auto ok = check_asl_market(fair);
  CHECK(ok.avoids);
  REQUIRE(ok.witness);
  for (const auto& table : fair.tables())
    for (std::size_t w = 0; w < 2; ++w) CHECK(expectation_sign_check(table.gamble(w), *ok.witness));
}

TEST_CASE("expectation sign check matches the implied-probability bound") {
  const auto forest = testing::forest();
  const Gamble g_d = forest.gamble(1);
  const std::vector<Rational> uniform{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  CHECK(expectation(g_d, uniform) == Rational(-1));
  CHECK_FALSE(expectation_sign_check(g_d, uniform));
  CHECK(uniform[1] > Rational(5, 18));

  const std::vector<Rational> boundary{Rational(1, 2), Rational(5, 18), Rational(2, 9)};
  CHECK(expectation_sign_check(g_d, boundary));
  CHECK(expectation(g_d, boundary) == Rational(0));

  CHECK(expectation_sign_check(Gamble{0, 1, 2}, uniform));
}

TEST_CASE("expectation sign check rejects non-pmfs") {
  const Gamble g{1, 1};
  CHECK_THROWS_AS(expectation_sign_check(g, std::vector<Rational>{Rational(1, 2), Rational(1, 3)}), DomainError);
  CHECK_THROWS_AS(expectation_sign_check(g, std::vector<Rational>{Rational(3, 2), Rational(-1, 2)}), DomainError);
  CHECK_THROWS_AS(expectation_sign_check(g, std::vector<Rational>{Rational(1)}), DomainError);
}
