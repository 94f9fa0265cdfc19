#pragma once

#include "sureloss/choquet.hpp"
#include "sureloss/coupon.hpp"
#include "sureloss/model.hpp"
#include "sureloss/strategy.hpp"
#include "sureloss/sure_loss.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sureloss::report {

using nlohmann::json;

inline constexpr int kDecimalPlaces = 4;

/// {"exact": "num/den", "decimal": "x.xxxx"}; the decimal is display-only.
json number(const Rational& value);

/// Builds the check-asl report. `max_sources` names, per outcome, the
/// bookmaker whose odds were used; empty for a single-bookmaker check.
json asl_verdict(const OddsTable& table, const ASLVerdict& verdict, const std::vector<std::string>& max_sources);

json decomposition(const OutcomeSpace& space, const LevelSetDecomposition& d);

json coupon_entry(const OutcomeSpace& space, const CouponEvaluation& entry);

/// Stakes, gain, per-outcome customer payoffs and the audited dual.
json strategy(const OddsTable& table, const Gamble& f, const StrategyReport& report);

}  // namespace sureloss::report
