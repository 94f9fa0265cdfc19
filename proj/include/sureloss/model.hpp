#pragma once

#include "sureloss/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sureloss {

struct Outcome {
  std::size_t id;
  std::string label;
};

/// Finite set of mutually exclusive outcomes with dense ids 0..n-1.
class OutcomeSpace {
 public:
  OutcomeSpace() = default;
  /// Throws DomainError on duplicate or empty labels.
  explicit OutcomeSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  bool contains(std::size_t id) const { return id < labels_.size(); }

  /// Throws DomainError when `id` is out of range.
  Outcome at(std::size_t id) const;
  const std::string& label(std::size_t id) const;
  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws DomainError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const OutcomeSpace&, const OutcomeSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Fractional odds a/b: a stake of b wins a. Components stay as given, so
/// 10/2 and 5/1 describe the same price but different unit stakes.
class FractionalOdds {
 public:
  /// Throws DomainError unless a >= 0 and b > 0.
  FractionalOdds(Rational a, Rational b);

  /// "a/b" or a bare "a" (read as a/1).
  static FractionalOdds parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// The price a/b as a single rational.
  Rational ratio() const { return a_ / b_; }

  /// "a/b", or just "a" when b is one; integral components print bare.
  std::string str() const;

  friend bool operator==(const FractionalOdds&, const FractionalOdds&) = default;

 private:
  Rational a_;
  Rational b_;
};

/// Payoff vector over an outcome space, from the bookmaker's side.
class Gamble {
 public:
  Gamble() = default;
  explicit Gamble(std::vector<Rational> payoffs) : payoffs_(std::move(payoffs)) {}
  Gamble(std::initializer_list<Rational> payoffs) : payoffs_(payoffs) {}

  static Gamble constant(std::size_t size, const Rational& value);
  static Gamble indicator(std::size_t size, std::span<const std::size_t> members);

  std::size_t size() const { return payoffs_.size(); }
  const Rational& operator[](std::size_t i) const { return payoffs_[i]; }
  const std::vector<Rational>& payoffs() const { return payoffs_; }

  Rational min() const;
  Rational max() const;

  /// Pointwise sum; throws DomainError on a size mismatch.
  Gamble& operator+=(const Gamble& rhs);
  Gamble& operator*=(const Rational& scale);
  friend Gamble operator+(Gamble lhs, const Gamble& rhs) { return lhs += rhs; }
  friend Gamble operator*(const Rational& scale, Gamble g) { return g *= scale; }

  /// Shift every payoff by a constant.
  Gamble plus(const Rational& c) const;

  friend bool operator==(const Gamble&, const Gamble&) = default;

 private:
  std::vector<Rational> payoffs_;
};

Gamble negate(const Gamble& g);

/// Expectation sum_w g(w) p(w); sizes must match.
Rational expectation(const Gamble& g, std::span<const Rational> p);

/// One bookmaker's odds, one entry per outcome of `space`.
class OddsTable {
 public:
  /// Throws DomainError unless `odds` has exactly one entry per outcome.
  OddsTable(std::string bookmaker, OutcomeSpace space, std::vector<FractionalOdds> odds);

  const std::string& bookmaker() const { return bookmaker_; }
  const OutcomeSpace& space() const { return space_; }
  std::size_t size() const { return odds_.size(); }
  const FractionalOdds& odds(std::size_t outcome) const;
  const std::vector<FractionalOdds>& all_odds() const { return odds_; }

  /// The bookmaker's gamble for a bet on `outcome`.
  Gamble gamble(std::size_t outcome) const;

  friend bool operator==(const OddsTable&, const OddsTable&) = default;

 private:
  std::string bookmaker_;
  OutcomeSpace space_;
  std::vector<FractionalOdds> odds_;
};

/// Several bookmakers quoting on the same outcome space.
class Market {
 public:
  /// Throws DomainError when `tables` is empty, a table uses a different
  /// outcome space, or two tables share a bookmaker name.
  Market(OutcomeSpace space, std::vector<OddsTable> tables);

  const OutcomeSpace& space() const { return space_; }
  const std::vector<OddsTable>& tables() const { return tables_; }
  const OddsTable* find(std::string_view bookmaker) const;

  friend bool operator==(const Market&, const Market&) = default;

 private:
  OutcomeSpace space_;
  std::vector<OddsTable> tables_;
};

/// Bookmaker payoff for odds a/b on `target`: -a on the target, +b elsewhere.
/// Throws DomainError when `target` is not in `space`.
Gamble gamble_from_odds(const FractionalOdds& odds, std::size_t target, const OutcomeSpace& space);

/// (alpha a)/(alpha b). Throws DomainError unless alpha > 0.
FractionalOdds scale_odds(const FractionalOdds& odds, const Rational& alpha);

}  // namespace sureloss
