#include "sureloss/report.hpp"

namespace sureloss::report {

json number(const Rational& value) {
  return json{{"exact", value.str()}, {"decimal", value.to_decimal(kDecimalPlaces)}};
}

json asl_verdict(const OddsTable& table, const ASLVerdict& verdict, const std::vector<std::string>& max_sources) {
  const auto& space = table.space();
  const UpperPMF pbar = upper_pmf_from_odds(table);

  json outcomes = json::array();
  for (std::size_t w = 0; w < space.size(); ++w) {
    json row{{"outcome", space.label(w)}, {"odds", table.odds(w).str()}, {"upper_probability", number(pbar[w])}};
    if (!max_sources.empty()) row["bookmaker"] = max_sources[w];
    if (verdict.witness) row["witness"] = number((*verdict.witness)[w]);
    outcomes.push_back(std::move(row));
  }
  return json{{"avoids_sure_loss", verdict.avoids},
              {"total", number(verdict.total)},
              {"over_round", number(Rational(100) * (verdict.total - Rational(1)))},
              {"outcomes", std::move(outcomes)}};
}

json decomposition(const OutcomeSpace& space, const LevelSetDecomposition& d) {
  json levels = json::array();
  for (const auto& level : d.levels) {
    json members = json::array();
    for (auto w : level.set) members.push_back(space.label(w));
    levels.push_back(json{{"step", number(level.step)}, {"set", std::move(members)}});
  }
  return json{{"base", number(d.base)}, {"levels", std::move(levels)}};
}

json coupon_entry(const OutcomeSpace& space, const CouponEvaluation& entry) {
  json payoffs = json::array();
  for (const auto& v : entry.coupon.gamble.payoffs()) payoffs.push_back(v.str());
  return json{{"first", space.label(entry.coupon.first)},
              {"coupon", space.label(entry.coupon.coupon)},
              {"coupon_odds", entry.coupon.coupon_odds.str()},
              {"upper", number(entry.upper)},
              {"exploitable", entry.exploitable()},
              {"gamble", std::move(payoffs)}};
}

json strategy(const OddsTable& table, const Gamble& f, const StrategyReport& r) {
  const auto& space = table.space();
  const auto audit = verify_certificate(table, f, r);
  const auto payoffs = customer_payoffs(table, f, r.stakes);

  json stakes = json::array();
  for (std::size_t w = 0; w < space.size(); ++w)
    stakes.push_back(json{{"outcome", space.label(w)},
                          {"odds", table.odds(w).str()},
                          {"stake", number(r.stakes[w])},
                          {"customer_payoff", number(payoffs[w])}});

  json ordering = json::array();
  json dual = json::array();
  for (auto w : r.certificate.ordering) {
    ordering.push_back(space.label(w));
    dual.push_back(json{{"outcome", space.label(w)}, {"p", number(r.certificate.p[w])}});
  }

  json out{{"alpha", number(r.alpha)},
           {"guaranteed_gain", number(r.guaranteed_gain)},
           {"stakes", std::move(stakes)},
           {"certificate",
            json{{"status", audit.ok() ? "verified" : "failed"},
                 {"dual_feasible", audit.dual_feasible},
                 {"primal_feasible", audit.primal_feasible},
                 {"objectives_match", audit.objectives_match},
                 {"complementary_slackness", audit.complementary_slackness},
                 {"issues", audit.issues},
                 {"k", r.certificate.k},
                 {"k_prime", r.certificate.k_prime},
                 {"ordering", std::move(ordering)},
                 {"dual", std::move(dual)}}}};
  if (r.coupon) {
    out["first"] = space.label(r.coupon->first);
    out["coupon"] = space.label(r.coupon->second);
  }
  return out;
}

}  // namespace sureloss::report
