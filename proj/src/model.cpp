#include "sureloss/model.hpp"

#include "sureloss/errors.hpp"

#include <algorithm>
#include <set>

namespace sureloss {

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw DomainError("outcome label must not be empty");
    if (!seen.insert(label).second) throw DomainError("duplicate outcome '" + label + "'");
  }
}

Outcome OutcomeSpace::at(std::size_t id) const { return Outcome{id, label(id)}; }

const std::string& OutcomeSpace::label(std::size_t id) const {
  if (!contains(id))
    throw DomainError("outcome " + std::to_string(id) + " outside space of size " + std::to_string(size()));
  return labels_[id];
}

std::optional<std::size_t> OutcomeSpace::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t OutcomeSpace::index_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw DomainError("unknown outcome '" + std::string(label) + "'");
}

FractionalOdds::FractionalOdds(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() < 0) throw DomainError("odds numerator must be non-negative, got " + a_.str());
  if (b_.sign() <= 0) throw DomainError("odds denominator must be positive, got " + b_.str());
}

FractionalOdds FractionalOdds::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return FractionalOdds(Rational::parse(text), Rational(1));
  return FractionalOdds(Rational::parse(text.substr(0, slash)), Rational::parse(text.substr(slash + 1)));
}

std::string FractionalOdds::str() const {
  auto component = [](const Rational& r) {
    return r.is_integer() ? r.numerator().str() : "(" + r.str() + ")";
  };
  if (b_ == Rational(1)) return component(a_);
  return component(a_) + "/" + component(b_);
}

Gamble Gamble::constant(std::size_t size, const Rational& value) {
  return Gamble(std::vector<Rational>(size, value));
}

Gamble Gamble::indicator(std::size_t size, std::span<const std::size_t> members) {
  std::vector<Rational> payoffs(size, Rational(0));
  for (auto id : members) {
    if (id >= size) throw DomainError("indicator member outside outcome space");
    payoffs[id] = Rational(1);
  }
  return Gamble(std::move(payoffs));
}

Rational Gamble::min() const {
  if (payoffs_.empty()) throw DomainError("empty gamble has no minimum");
  return *std::min_element(payoffs_.begin(), payoffs_.end());
}

Rational Gamble::max() const {
  if (payoffs_.empty()) throw DomainError("empty gamble has no maximum");
  return *std::max_element(payoffs_.begin(), payoffs_.end());
}

Gamble& Gamble::operator+=(const Gamble& rhs) {
  if (rhs.size() != size()) throw DomainError("gamble size mismatch");
  for (std::size_t i = 0; i < size(); ++i) payoffs_[i] += rhs.payoffs_[i];
  return *this;
}

Gamble& Gamble::operator*=(const Rational& scale) {
  for (auto& v : payoffs_) v *= scale;
  return *this;
}

Gamble Gamble::plus(const Rational& c) const {
  Gamble out = *this;
  for (auto& v : out.payoffs_) v += c;
  return out;
}

Gamble negate(const Gamble& g) {
  std::vector<Rational> out;
  out.reserve(g.size());
  for (const auto& v : g.payoffs()) out.push_back(-v);
  return Gamble(std::move(out));
}

Rational expectation(const Gamble& g, std::span<const Rational> p) {
  if (g.size() != p.size()) throw DomainError("gamble and probability vector differ in size");
  Rational sum;
  for (std::size_t i = 0; i < p.size(); ++i) sum += g[i] * p[i];
  return sum;
}

OddsTable::OddsTable(std::string bookmaker, OutcomeSpace space, std::vector<FractionalOdds> odds)
    : bookmaker_(std::move(bookmaker)), space_(std::move(space)), odds_(std::move(odds)) {
  if (odds_.size() != space_.size())
    throw DomainError("bookmaker '" + bookmaker_ + "' quotes " + std::to_string(odds_.size()) +
                      " odds for " + std::to_string(space_.size()) + " outcomes");
}

const FractionalOdds& OddsTable::odds(std::size_t outcome) const {
  if (outcome >= odds_.size()) throw DomainError("outcome outside odds table");
  return odds_[outcome];
}

Gamble OddsTable::gamble(std::size_t outcome) const {
  return gamble_from_odds(odds(outcome), outcome, space_);
}

Market::Market(OutcomeSpace space, std::vector<OddsTable> tables)
    : space_(std::move(space)), tables_(std::move(tables)) {
  if (tables_.empty()) throw DomainError("market needs at least one bookmaker");
  std::set<std::string_view> names;
  for (const auto& t : tables_) {
    if (!(t.space() == space_))
      throw DomainError("bookmaker '" + t.bookmaker() + "' uses a different outcome space");
    if (!names.insert(t.bookmaker()).second)
      throw DomainError("duplicate bookmaker '" + t.bookmaker() + "'");
  }
}

const OddsTable* Market::find(std::string_view bookmaker) const {
  for (const auto& t : tables_)
    if (t.bookmaker() == bookmaker) return &t;
  return nullptr;
}

Gamble gamble_from_odds(const FractionalOdds& odds, std::size_t target, const OutcomeSpace& space) {
  if (!space.contains(target))
    throw DomainError("target outcome " + std::to_string(target) + " not in outcome space");
  std::vector<Rational> payoffs(space.size(), odds.b());
  payoffs[target] = -odds.a();
  return Gamble(std::move(payoffs));
}

FractionalOdds scale_odds(const FractionalOdds& odds, const Rational& alpha) {
  if (alpha.sign() <= 0) throw DomainError("odds scale must be positive, got " + alpha.str());
  return FractionalOdds(odds.a() * alpha, odds.b() * alpha);
}

}  // namespace sureloss
