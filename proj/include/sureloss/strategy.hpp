#pragma once

#include "sureloss/choquet.hpp"
#include "sureloss/coupon.hpp"
#include "sureloss/model.hpp"
#include "sureloss/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sureloss {

/// Optimal solution of the dual program max E_p(f) s.t. 0 <= p <= pbar,
/// sum p = 1, built greedily over the level sets of f.
struct DualSolution {
  std::vector<Rational> p;
  /// Outcomes from the smallest level set outwards.
  std::vector<std::size_t> ordering;
  /// 1-based position in `ordering` where the cumulative upper mass first
  /// reaches one.
  std::size_t k = 0;
  /// 1-based position of the last outcome with p == pbar; 0 if none.
  std::size_t k_prime = 0;
};

/// Optimal stakes for a gamble f together with the dual certificate.
struct StrategyReport {
  /// (first bet, coupon outcome) when f is a first-free gamble.
  std::optional<std::pair<std::size_t, std::size_t>> coupon;
  /// Optimal value of the primal; equals the upper natural extension of f.
  Rational alpha;
  /// Non-negative stake on each of the bookmaker's gambles, by outcome.
  std::vector<Rational> stakes;
  /// -alpha when alpha < 0, else zero.
  Rational guaranteed_gain;
  DualSolution certificate;
};

/// Outcomes by descending f, ties by ascending id.
std::vector<std::size_t> order_outcomes(const Gamble& f);

/// Greedy dual solution. Throws PreconditionError when pbar sums below one.
DualSolution construct_dual(const UpperPMF& pbar, const Gamble& f);

/// Solves the complementary slackness system for the stakes, with alpha
/// pinned to E_p(f). Rows 1..k' of the ordering are tight; stakes beyond k'
/// are zero. A singular system (cumulative upper mass exactly one at k') is
/// resolved exactly along its one-dimensional null space.
/// Throws CertificateError if no feasible non-negative stake vector results,
/// and DomainError if `dual` is not feasible for the table.
StrategyReport solve_stakes(const OddsTable& table, const Gamble& f, const DualSolution& dual);

/// Per-condition outcome of verify_certificate.
struct CertificateAudit {
  bool dual_feasible = false;
  bool primal_feasible = false;
  bool objectives_match = false;
  bool complementary_slackness = false;
  std::vector<std::string> issues;

  bool ok() const { return dual_feasible && primal_feasible && objectives_match && complementary_slackness; }
  explicit operator bool() const { return ok(); }
};

/// Independent optimality check, exact:
///  (i)   0 <= p <= pbar and sum p = 1;
///  (ii)  alpha - sum_i g_i(w) stake_i >= f(w) for every w, stakes >= 0;
///  (iii) E_p(f) == alpha;
/// plus complementary slackness (tight rows wherever p > 0, and p == pbar
/// wherever a stake is positive).
CertificateAudit verify_certificate(const OddsTable& table, const Gamble& f, const StrategyReport& report);

/// Customer's net payoff per outcome: -(f + sum_i stake_i g_i).
std::vector<Rational> customer_payoffs(const OddsTable& table, const Gamble& f, std::span<const Rational> stakes);

/// Stakes and certificate for one first-free gamble. For exploitable coupons
/// also checks that k' >= n - 2 and throws CertificateError if not.
StrategyReport coupon_strategy(const OddsTable& table, const FirstFreeGamble& coupon);

/// The coupon pair with the most negative upper value and its strategy;
/// nullopt when no pair is exploitable.
std::optional<StrategyReport> best_strategy(const OddsTable& table, const CouponRules& rules = {});

}  // namespace sureloss
