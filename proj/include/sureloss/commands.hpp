#pragma once

#include "sureloss/model.hpp"
#include "sureloss/rational.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sureloss::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,             // bad arguments or unreadable/malformed input
  kBaseSureLoss = 2,      // the bookmaker's odds alone already allow a sure gain
  kCertificateFailure = 3 // internal bug sentinel; never expected on valid input
};

nlohmann::json check_asl(const Market& market, const std::optional<std::string>& bookmaker);

/// Throws BaseSureLossError when the bookmaker's own odds fail to avoid
/// sure loss.
nlohmann::json find_coupon_arbitrage(const Market& market, const std::string& bookmaker,
                                     const std::optional<Rational>& max_coupon, bool all);

nlohmann::json natural_extension(const Market& market, const std::string& bookmaker, const std::string& gamble);

/// Human-readable rendering of any report produced above.
std::string render_table(const nlohmann::json& report);

/// Full command-line entry point: `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sureloss::cli
