#pragma once

#include "sureloss/model.hpp"
#include "sureloss/odds_csv.hpp"

#include <string>

namespace sureloss::testing {

inline std::string data_path(const std::string& name) { return std::string(SURELOSS_DATA_DIR) + "/" + name; }

inline OutcomeSpace wdl() { return OutcomeSpace({"W", "D", "L"}); }

inline OddsTable forest() {
  return OddsTable("Forest", wdl(),
                   {FractionalOdds::parse("3/4"), FractionalOdds::parse("13/5"), FractionalOdds::parse("16/5")});
}

inline Market three_bookmakers() { return read_odds_csv(data_path("three_bookmakers.csv")); }

inline Market euro2016() { return read_odds_csv(data_path("euro2016.csv")); }

inline OddsTable bet2() { return *euro2016().find("Bet2"); }

}  // namespace sureloss::testing
