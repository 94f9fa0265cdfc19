#include "sureloss/coupon.hpp"

#include "sureloss/choquet.hpp"
#include "sureloss/errors.hpp"
#include "sureloss/sure_loss.hpp"

#include <algorithm>
#include <exception>
#include <utility>

namespace sureloss {

namespace {

struct PairPlan {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<SkippedPair> skipped;
};

PairPlan plan_pairs(const OddsTable& table, const CouponRules& rules) {
  PairPlan plan;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& stake = table.odds(i).b();
    const bool over_cap = rules.max_coupon_value && stake > *rules.max_coupon_value;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (over_cap) {
        plan.skipped.push_back({i, j,
                                "first stake " + stake.str() + " exceeds coupon cap " +
                                    rules.max_coupon_value->str()});
      } else {
        plan.pairs.emplace_back(i, j);
      }
    }
  }
  return plan;
}

void sort_entries(std::vector<CouponEvaluation>& entries) {
  std::sort(entries.begin(), entries.end(), [](const CouponEvaluation& l, const CouponEvaluation& r) {
    if (l.upper != r.upper) return l.upper < r.upper;
    if (l.coupon.first != r.coupon.first) return l.coupon.first < r.coupon.first;
    return l.coupon.coupon < r.coupon.coupon;
  });
}

CouponEvaluation evaluate(const OddsTable& table, const UpperPMF& pbar, std::size_t i, std::size_t j,
                          const CouponRules& rules) {
  auto coupon = first_free_gamble(table, i, j, rules);
  Rational upper = upper_natural_extension(pbar, coupon.gamble);
  return {std::move(coupon), std::move(upper)};
}

}  // namespace

void validate_rules(const CouponRules& rules) {
  if (!rules.first_bet_only) throw RuleViolation("coupons are only issued on the first bet");
  if (!rules.single_outcome_spend) throw RuleViolation("a coupon must be spent on a single outcome");
  if (!rules.same_bookmaker)
    throw RuleViolation("a coupon must be spent with the bookmaker that issued it");
  if (rules.max_coupon_value && rules.max_coupon_value->sign() <= 0)
    throw RuleViolation("coupon cap must be positive");
}

void require_base_avoids_sure_loss(const OddsTable& table) {
  const auto verdict = check_asl_single(table);
  if (!verdict.avoids)
    throw BaseSureLossError("odds of '" + table.bookmaker() + "' already incur sure loss (sum b/(a+b) = " +
                            verdict.total.str() + " < 1); no coupon is needed for a sure gain");
}

FirstFreeGamble first_free_gamble(const OddsTable& table, std::size_t first, std::size_t coupon,
                                  const CouponRules& rules) {
  validate_rules(rules);
  const auto& space = table.space();
  if (!space.contains(first) || !space.contains(coupon))
    throw DomainError("coupon outcomes must belong to the table's outcome space");
  if (first == coupon)
    throw RuleViolation("the free coupon must be spent on an outcome other than '" + space.label(first) + "'");

  const FractionalOdds& first_odds = table.odds(first);
  const FractionalOdds& coupon_odds = table.odds(coupon);
  if (rules.max_coupon_value && first_odds.b() > *rules.max_coupon_value)
    throw RuleViolation("first stake " + first_odds.b().str() + " exceeds the coupon cap " +
                        rules.max_coupon_value->str());

  const Rational scale = first_odds.b() / coupon_odds.b();
  const FractionalOdds scaled = scale_odds(coupon_odds, scale);

  // The coupon stake is not the customer's money, so on a loss the
  // bookmaker gains nothing from it.
  std::vector<Rational> coupon_leg(space.size(), Rational(0));
  coupon_leg[coupon] = -scaled.a();
  Gamble g = gamble_from_odds(first_odds, first, space) + Gamble(std::move(coupon_leg));

  return FirstFreeGamble{first, coupon, scaled, scale, std::move(g)};
}

Rational exploitability(const OddsTable& table, const FirstFreeGamble& coupon) {
  require_base_avoids_sure_loss(table);
  return upper_natural_extension(upper_pmf_from_odds(table), coupon.gamble);
}

CouponEnumeration enumerate_coupons_serial(const OddsTable& table, const CouponRules& rules) {
  validate_rules(rules);
  require_base_avoids_sure_loss(table);
  const UpperPMF pbar = upper_pmf_from_odds(table);
  auto plan = plan_pairs(table, rules);

  CouponEnumeration out;
  out.entries.reserve(plan.pairs.size());
  for (const auto& [i, j] : plan.pairs) out.entries.push_back(evaluate(table, pbar, i, j, rules));
  sort_entries(out.entries);
  out.skipped = std::move(plan.skipped);
  return out;
}

CouponEnumeration enumerate_coupons(const OddsTable& table, const CouponRules& rules) {
#ifndef SURELOSS_HAVE_OPENMP
  return enumerate_coupons_serial(table, rules);
#else
  validate_rules(rules);
  require_base_avoids_sure_loss(table);
  const UpperPMF pbar = upper_pmf_from_odds(table);
  auto plan = plan_pairs(table, rules);

  const auto count = static_cast<std::ptrdiff_t>(plan.pairs.size());
  std::vector<std::optional<CouponEvaluation>> slots(plan.pairs.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      const auto [i, j] = plan.pairs[static_cast<std::size_t>(k)];
      slots[static_cast<std::size_t>(k)] = evaluate(table, pbar, i, j, rules);
    } catch (...) {
#pragma omp critical(sureloss_coupon_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CouponEnumeration out;
  out.entries.reserve(slots.size());
  for (auto& slot : slots) out.entries.push_back(std::move(*slot));
  sort_entries(out.entries);
  out.skipped = std::move(plan.skipped);
  return out;
#endif
}

}  // namespace sureloss
