#pragma once

#include "sureloss/model.hpp"
#include "sureloss/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sureloss {

/// Terms of a first-bet free coupon. The coupon's value equals the first
/// stake, applies to the first bet only, and must be spent with the same
/// bookmaker on a single other outcome. Only the cap is configurable; the
/// flags exist so callers cannot silently ask for unsupported terms.
struct CouponRules {
  std::optional<Rational> max_coupon_value;
  bool first_bet_only = true;
  bool single_outcome_spend = true;
  bool same_bookmaker = true;
};

/// Throws RuleViolation for unsupported terms or a non-positive cap.
void validate_rules(const CouponRules& rules);

/// First bet on `first`, free coupon of equal value spent on `coupon`.
struct FirstFreeGamble {
  std::size_t first;
  std::size_t coupon;
  /// Coupon odds rescaled so the coupon stake equals the first stake b_i.
  FractionalOdds coupon_odds;
  /// b_i / b_j, the factor applied to the coupon outcome's odds.
  Rational stake_scale;
  Gamble gamble;
};

struct CouponEvaluation {
  FirstFreeGamble coupon;
  /// Upper natural extension of the first-free gamble; negative means the
  /// customer can lock in a gain of its magnitude.
  Rational upper;

  bool exploitable() const { return upper.sign() < 0; }
};

struct SkippedPair {
  std::size_t first;
  std::size_t coupon;
  std::string reason;
};

struct CouponEnumeration {
  /// Sorted by upper value ascending, then (first, coupon).
  std::vector<CouponEvaluation> entries;
  /// Pairs left out because they break the coupon cap.
  std::vector<SkippedPair> skipped;
};

/// The bookmaker's payoff g_{w_i} + g~_{w_j}: -a_i on w_i,
/// (b_j - a_j) b_i / b_j on w_j and b_i elsewhere.
/// Throws RuleViolation when first == coupon or b_i exceeds the cap, and
/// DomainError for outcomes outside the table.
FirstFreeGamble first_free_gamble(const OddsTable& table, std::size_t first, std::size_t coupon,
                                  const CouponRules& rules = {});

/// Upper natural extension of the coupon's gamble under the table's upper
/// pmf. Throws BaseSureLossError if the table alone already fails to avoid
/// sure loss.
Rational exploitability(const OddsTable& table, const FirstFreeGamble& coupon);

/// Every ordered pair (i, j), i != j, with its upper value. Pairs are
/// evaluated in parallel when OpenMP is available; the order of the result
/// does not depend on scheduling.
CouponEnumeration enumerate_coupons(const OddsTable& table, const CouponRules& rules = {});

/// Single-threaded reference for enumerate_coupons.
CouponEnumeration enumerate_coupons_serial(const OddsTable& table, const CouponRules& rules = {});

/// Throws BaseSureLossError unless the table avoids sure loss on its own.
void require_base_avoids_sure_loss(const OddsTable& table);

}  // namespace sureloss
