#pragma once

#include "sureloss/model.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace sureloss {

/// Long-format odds file:
///
///     # comment
///     outcome,bookmaker,odds
///     W,River,4/5
///
/// Outcomes and bookmakers keep their order of first appearance. Every
/// bookmaker must quote every outcome exactly once. Errors are ParseError
/// with the 1-based line and column.
Market parse_odds_csv(std::istream& in);
Market read_odds_csv(const std::filesystem::path& path);

/// Inverse of parse_odds_csv (outcome-major, canonical odds text).
void write_odds_csv(std::ostream& out, const Market& market);

/// Wide layout: header `outcome,<bookmaker>,<bookmaker>,...`, then one row
/// per outcome with one odds cell per bookmaker.
Market parse_wide_odds_csv(std::istream& in);

/// Splits one CSV record; double-quoted fields may contain commas and "".
/// Throws ParseError (row `line`) on an unterminated quote.
std::vector<std::string> split_csv_record(const std::string& record, std::size_t line);

}  // namespace sureloss
