#include "sureloss/strategy.hpp"

#include "sureloss/errors.hpp"
#include "sureloss/linear_system.hpp"
#include "sureloss/sure_loss.hpp"

#include <algorithm>
#include <numeric>

namespace sureloss {

namespace {

void require_permutation(std::span<const std::size_t> ordering, std::size_t n) {
  if (ordering.size() != n) throw DomainError("dual ordering has the wrong length");
  std::vector<bool> seen(n, false);
  for (auto w : ordering) {
    if (w >= n || seen[w]) throw DomainError("dual ordering is not a permutation of the outcomes");
    seen[w] = true;
  }
}

// Bookmaker payoff at `outcome` for a unit of odds on `bet`, without
// materialising the whole gamble.
Rational payoff(const OddsTable& table, std::size_t bet, std::size_t outcome) {
  const auto& odds = table.odds(bet);
  return bet == outcome ? -odds.a() : odds.b();
}

// f(w) + sum_i stake_i g_i(w)
Rational combined(const OddsTable& table, const Gamble& f, std::span<const Rational> stakes, std::size_t w) {
  Rational value = f[w];
  for (std::size_t i = 0; i < stakes.size(); ++i)
    if (!stakes[i].is_zero()) value += stakes[i] * payoff(table, i, w);
  return value;
}

// Interval of t keeping `base + t * slope >= 0`, intersected into [lo, hi].
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool empty = false;

  void require_non_negative(const Rational& base, const Rational& slope) {
    if (slope.is_zero()) {
      if (base.sign() < 0) empty = true;
      return;
    }
    const Rational bound = -base / slope;
    if (slope.sign() > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }

  std::optional<Rational> pick() const {
    if (empty || (lo && hi && *lo > *hi)) return std::nullopt;
    if (lo) return lo;
    if (hi) return min(*hi, Rational(0));
    return Rational(0);
  }
};

}  // namespace

std::vector<std::size_t> order_outcomes(const Gamble& f) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return f[l] > f[r]; });
  return order;
}

DualSolution construct_dual(const UpperPMF& pbar, const Gamble& f) {
  if (f.size() != pbar.size()) throw DomainError("gamble and upper pmf differ in size");
  const Rational total = pbar.total();
  if (total < Rational(1))
    throw PreconditionError("upper pmf sums to " + total.str() + " < 1; no dual solution exists");

  DualSolution dual;
  dual.ordering = order_outcomes(f);
  dual.p.assign(f.size(), Rational(0));

  Rational filled;
  for (std::size_t pos = 0; pos < dual.ordering.size(); ++pos) {
    const std::size_t w = dual.ordering[pos];
    if (filled + pbar[w] >= Rational(1)) {
      dual.p[w] = Rational(1) - filled;
      dual.k = pos + 1;
      break;
    }
    dual.p[w] = pbar[w];
    filled += pbar[w];
  }

  for (std::size_t pos = dual.k; pos > 0; --pos) {
    const std::size_t w = dual.ordering[pos - 1];
    if (dual.p[w] == pbar[w]) {
      dual.k_prime = pos;
      break;
    }
  }
  return dual;
}

std::vector<Rational> customer_payoffs(const OddsTable& table, const Gamble& f, std::span<const Rational> stakes) {
  if (f.size() != table.size() || stakes.size() != table.size())
    throw DomainError("gamble, stakes and odds table differ in size");
  std::vector<Rational> out;
  out.reserve(f.size());
  for (std::size_t w = 0; w < f.size(); ++w) out.push_back(-combined(table, f, stakes, w));
  return out;
}

StrategyReport solve_stakes(const OddsTable& table, const Gamble& f, const DualSolution& dual) {
  const std::size_t n = table.size();
  if (f.size() != n || dual.p.size() != n) throw DomainError("gamble, dual and odds table differ in size");
  require_permutation(dual.ordering, n);
  if (dual.k_prime > n) throw DomainError("k' exceeds the number of outcomes");

  const UpperPMF pbar = upper_pmf_from_odds(table);
  for (std::size_t w = 0; w < n; ++w)
    if (dual.p[w].sign() < 0 || dual.p[w] > pbar[w])
      throw DomainError("dual mass on '" + table.space().label(w) + "' violates 0 <= p <= pbar");
  require_pmf(dual.p);

  const Rational alpha = expectation(f, dual.p);
  const std::span<const std::size_t> support(dual.ordering.data(), dual.k_prime);

  // alpha - sum_{i in S} g_i(w_j) stake_i = f(w_j) for each w_j in S.
  Matrix a(support.size(), std::vector<Rational>(support.size()));
  std::vector<Rational> rhs(support.size());
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t c = 0; c < support.size(); ++c) a[r][c] = payoff(table, support[c], support[r]);
    rhs[r] = alpha - f[support[r]];
  }

  auto solution = solve_linear_system(std::move(a), std::move(rhs));
  if (!solution) throw CertificateError("complementary slackness system is inconsistent");
  if (solution->nullspace.size() > 1)
    throw CertificateError("complementary slackness system has a null space of dimension " +
                           std::to_string(solution->nullspace.size()));

  std::vector<Rational> stakes(n, Rational(0));
  if (solution->unique()) {
    for (std::size_t c = 0; c < support.size(); ++c) stakes[support[c]] = solution->particular[c];
  } else {
    // One free direction: keep every stake non-negative and every
    // non-support row feasible, then take the smallest admissible step.
    const auto& base = solution->particular;
    const auto& dir = solution->nullspace.front();
    Interval range;
    for (std::size_t c = 0; c < support.size(); ++c) range.require_non_negative(base[c], dir[c]);
    std::vector<bool> in_support(n, false);
    for (auto w : support) in_support[w] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (in_support[w]) continue;
      Rational slack = alpha - f[w];
      Rational slope;
      for (std::size_t c = 0; c < support.size(); ++c) {
        slack -= base[c] * payoff(table, support[c], w);
        slope -= dir[c] * payoff(table, support[c], w);
      }
      range.require_non_negative(slack, slope);
    }
    const auto step = range.pick();
    if (!step) throw CertificateError("degenerate complementary slackness system has no feasible stakes");
    for (std::size_t c = 0; c < support.size(); ++c) stakes[support[c]] = base[c] + *step * dir[c];
  }

  for (std::size_t w = 0; w < n; ++w)
    if (stakes[w].sign() < 0)
      throw CertificateError("stake on '" + table.space().label(w) + "' is negative (" + stakes[w].str() + ")", w);

  StrategyReport report;
  report.alpha = alpha;
  report.stakes = std::move(stakes);
  report.guaranteed_gain = alpha.sign() < 0 ? -alpha : Rational(0);
  report.certificate = dual;

  const auto audit = verify_certificate(table, f, report);
  if (!audit) {
    std::string detail;
    for (const auto& issue : audit.issues) detail += (detail.empty() ? "" : "; ") + issue;
    throw CertificateError("stake certificate failed verification: " + detail);
  }
  return report;
}

CertificateAudit verify_certificate(const OddsTable& table, const Gamble& f, const StrategyReport& report) {
  CertificateAudit audit;
  const std::size_t n = table.size();
  const auto& p = report.certificate.p;
  if (f.size() != n || p.size() != n || report.stakes.size() != n) {
    audit.issues.push_back("size mismatch between odds table, gamble, dual and stakes");
    return audit;
  }
  const UpperPMF pbar = upper_pmf_from_odds(table);
  const auto& space = table.space();

  audit.dual_feasible = true;
  Rational mass;
  for (std::size_t w = 0; w < n; ++w) {
    mass += p[w];
    if (p[w].sign() < 0 || p[w] > pbar[w]) {
      audit.dual_feasible = false;
      audit.issues.push_back("p(" + space.label(w) + ") = " + p[w].str() + " outside [0, " + pbar[w].str() + "]");
    }
  }
  if (mass != Rational(1)) {
    audit.dual_feasible = false;
    audit.issues.push_back("dual masses sum to " + mass.str());
  }

  audit.primal_feasible = true;
  audit.complementary_slackness = true;
  for (std::size_t w = 0; w < n; ++w) {
    if (report.stakes[w].sign() < 0) {
      audit.primal_feasible = false;
      audit.issues.push_back("negative stake on " + space.label(w));
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    const Rational value = combined(table, f, report.stakes, w);
    if (value > report.alpha) {
      audit.primal_feasible = false;
      audit.issues.push_back("primal row " + space.label(w) + " exceeds alpha: " + value.str() + " > " +
                             report.alpha.str());
    }
    if (p[w].sign() > 0 && value != report.alpha) {
      audit.complementary_slackness = false;
      audit.issues.push_back("p(" + space.label(w) + ") > 0 but its primal row is slack");
    }
    if (report.stakes[w].sign() > 0 && p[w] != pbar[w]) {
      audit.complementary_slackness = false;
      audit.issues.push_back("stake on " + space.label(w) + " is positive but p < pbar there");
    }
  }

  audit.objectives_match = expectation(f, p) == report.alpha;
  if (!audit.objectives_match)
    audit.issues.push_back("E_p(f) = " + expectation(f, p).str() + " differs from alpha = " + report.alpha.str());
  return audit;
}

StrategyReport coupon_strategy(const OddsTable& table, const FirstFreeGamble& coupon) {
  require_base_avoids_sure_loss(table);
  const DualSolution dual = construct_dual(upper_pmf_from_odds(table), coupon.gamble);
  StrategyReport report = solve_stakes(table, coupon.gamble, dual);
  report.coupon = std::make_pair(coupon.first, coupon.coupon);

  const std::size_t n = table.size();
  if (report.alpha.sign() < 0 && dual.k_prime + 2 < n)
    throw CertificateError("exploitable coupon with k' = " + std::to_string(dual.k_prime) + " < n - 2 = " +
                           std::to_string(n - 2));
  return report;
}

std::optional<StrategyReport> best_strategy(const OddsTable& table, const CouponRules& rules) {
  const auto enumeration = enumerate_coupons(table, rules);
  if (enumeration.entries.empty() || !enumeration.entries.front().exploitable()) return std::nullopt;
  return coupon_strategy(table, enumeration.entries.front().coupon);
}

}  // namespace sureloss
