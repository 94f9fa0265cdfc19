#include "sureloss/sure_loss.hpp"

#include "sureloss/errors.hpp"

namespace sureloss {

namespace {

// a/b > a'/b' by cross-multiplication (both denominators positive).
bool better_odds(const FractionalOdds& lhs, const FractionalOdds& rhs) {
  return lhs.a() * rhs.b() > rhs.a() * lhs.b();
}

}  // namespace

UpperPMF upper_pmf_from_odds(const OddsTable& table) {
  std::vector<Rational> bounds;
  bounds.reserve(table.size());
  for (const auto& odds : table.all_odds()) bounds.push_back(odds.b() / (odds.a() + odds.b()));
  return UpperPMF(std::move(bounds));
}

ASLVerdict check_asl_single(const OddsTable& table) {
  const UpperPMF pbar = upper_pmf_from_odds(table);
  ASLVerdict verdict;
  verdict.total = pbar.total();
  verdict.avoids = verdict.total >= Rational(1);
  if (verdict.avoids) {
    std::vector<Rational> p;
    p.reserve(pbar.size());
    for (const auto& bound : pbar.bounds()) p.push_back(bound / verdict.total);
    verdict.witness = std::move(p);
  }
  return verdict;
}

Rational over_round(const OddsTable& table) {
  return Rational(100) * (upper_pmf_from_odds(table).total() - Rational(1));
}

std::vector<std::size_t> max_odds_sources(const Market& market) {
  const auto& tables = market.tables();
  std::vector<std::size_t> source(market.space().size(), 0);
  for (std::size_t w = 0; w < source.size(); ++w)
    for (std::size_t t = 1; t < tables.size(); ++t)
      if (better_odds(tables[t].odds(w), tables[source[w]].odds(w))) source[w] = t;
  return source;
}

OddsTable max_odds(const Market& market) {
  if (market.tables().size() == 1) return market.tables().front();
  const auto source = max_odds_sources(market);
  std::vector<FractionalOdds> odds;
  odds.reserve(source.size());
  for (std::size_t w = 0; w < source.size(); ++w) odds.push_back(market.tables()[source[w]].odds(w));
  return OddsTable("maximum odds", market.space(), std::move(odds));
}

ASLVerdict check_asl_market(const Market& market) { return check_asl_single(max_odds(market)); }

void require_pmf(std::span<const Rational> p) {
  Rational sum;
  for (const auto& v : p) {
    if (v.sign() < 0) throw DomainError("probability " + v.str() + " is negative");
    sum += v;
  }
  if (sum != Rational(1)) throw DomainError("probabilities sum to " + sum.str() + ", not 1");
}

bool expectation_sign_check(const Gamble& g, std::span<const Rational> p) {
  if (g.size() != p.size()) throw DomainError("gamble and probability vector differ in size");
  require_pmf(p);
  return expectation(g, p).sign() >= 0;
}

}  // namespace sureloss
