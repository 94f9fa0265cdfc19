#include "sureloss/choquet.hpp"

#include "sureloss/errors.hpp"

#include <algorithm>

namespace sureloss {

namespace {

void require_in_space(std::span<const std::size_t> event, std::size_t size) {
  for (auto id : event)
    if (id >= size) throw DomainError("event member " + std::to_string(id) + " outside outcome space");
}

void require_avoids_sure_loss(const UpperPMF& pbar) {
  const Rational total = pbar.total();
  if (total < Rational(1))
    throw PreconditionError("upper pmf sums to " + total.str() + ", short of 1 by " +
                            (Rational(1) - total).str() + "; it incurs sure loss");
}

}  // namespace

UpperPMF::UpperPMF(std::vector<Rational> bounds) : bounds_(std::move(bounds)) {
  for (const auto& b : bounds_)
    if (b.sign() < 0 || b > Rational(1)) throw DomainError("upper probability " + b.str() + " outside [0, 1]");
}

Rational UpperPMF::total() const {
  Rational sum;
  for (const auto& b : bounds_) sum += b;
  return sum;
}

Rational LevelSetDecomposition::evaluate(std::size_t outcome) const {
  Rational value = base;
  for (const auto& level : levels)
    if (std::binary_search(level.set.begin(), level.set.end(), outcome)) value += level.step;
  return value;
}

LevelSetDecomposition decompose(const Gamble& f) {
  if (f.size() == 0) throw DomainError("cannot decompose a gamble on an empty space");

  std::vector<Rational> values = f.payoffs();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  LevelSetDecomposition out;
  out.base = values.front();
  for (std::size_t k = 1; k < values.size(); ++k) {
    OutcomeSet set;
    for (std::size_t w = 0; w < f.size(); ++w)
      if (f[w] >= values[k]) set.push_back(w);
    out.levels.push_back({values[k] - values[k - 1], std::move(set)});
  }
  return out;
}

Rational upper_event(const UpperPMF& pbar, std::span<const std::size_t> event) {
  require_in_space(event, pbar.size());
  Rational sum;
  for (auto id : event) sum += pbar[id];
  return min(sum, Rational(1));
}

Rational lower_event(const UpperPMF& pbar, std::span<const std::size_t> event) {
  require_in_space(event, pbar.size());
  Rational outside;
  for (auto id : complement(event, pbar.size())) outside += pbar[id];
  return max(Rational(0), Rational(1) - outside);
}

Rational upper_natural_extension(const UpperPMF& pbar, const Gamble& f) {
  if (f.size() != pbar.size()) throw DomainError("gamble and upper pmf differ in size");
  require_avoids_sure_loss(pbar);

  const auto decomposition = decompose(f);
  Rational value = decomposition.base;
  for (const auto& level : decomposition.levels) value += level.step * upper_event(pbar, level.set);
  return value;
}

Rational lower_natural_extension(const UpperPMF& pbar, const Gamble& f) {
  return -upper_natural_extension(pbar, negate(f));
}

OutcomeSet complement(std::span<const std::size_t> event, std::size_t size) {
  std::vector<bool> member(size, false);
  for (auto id : event) {
    if (id >= size) throw DomainError("event member outside outcome space");
    member[id] = true;
  }
  OutcomeSet out;
  for (std::size_t w = 0; w < size; ++w)
    if (!member[w]) out.push_back(w);
  return out;
}

}  // namespace sureloss
