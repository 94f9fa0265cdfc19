#pragma once

#include "sureloss/choquet.hpp"
#include "sureloss/model.hpp"
#include "sureloss/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sureloss {

/// Outcome of an avoiding-sure-loss test.
///
/// `total` is sum b/(a+b) over the odds in scope. When `avoids` holds,
/// `witness` is a pmf under which every gamble in scope has non-negative
/// expectation.
struct ASLVerdict {
  bool avoids = false;
  Rational total;
  std::optional<std::vector<Rational>> witness;
};

/// pbar(w_i) = b_i / (a_i + b_i)
UpperPMF upper_pmf_from_odds(const OddsTable& table);

/// Single bookmaker: avoids sure loss iff the implied probabilities sum to at
/// least one. The witness is the implied pmf normalised by that sum.
ASLVerdict check_asl_single(const OddsTable& table);

/// 100 * (sum b/(a+b) - 1)
Rational over_round(const OddsTable& table);

/// Per outcome, the largest odds a/b across all bookmakers; ties keep the
/// bookmaker listed first.
OddsTable max_odds(const Market& market);

/// Index into market.tables() of the bookmaker whose odds max_odds() picked,
/// one entry per outcome.
std::vector<std::size_t> max_odds_sources(const Market& market);

/// Verdict for the union of every bookmaker's gambles, via the maximum odds.
ASLVerdict check_asl_market(const Market& market);

/// sum_w g(w) p(w) >= 0. Throws DomainError if `p` is not a pmf of the
/// right size.
bool expectation_sign_check(const Gamble& g, std::span<const Rational> p);

/// Throws DomainError unless `p` is non-negative and sums to one.
void require_pmf(std::span<const Rational> p);

}  // namespace sureloss
