#pragma once

#include "sureloss/model.hpp"
#include "sureloss/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sureloss {

/// Sorted, duplicate-free list of outcome ids.
using OutcomeSet = std::vector<std::size_t>;

/// Upper probability mass function: per-outcome upper bounds in [0, 1].
class UpperPMF {
 public:
  /// Throws DomainError if any entry lies outside [0, 1].
  explicit UpperPMF(std::vector<Rational> bounds);

  std::size_t size() const { return bounds_.size(); }
  const Rational& operator[](std::size_t i) const { return bounds_[i]; }
  const std::vector<Rational>& bounds() const { return bounds_; }

  Rational total() const;
  /// True iff the lower prevision it induces avoids sure loss (total >= 1).
  bool avoids_sure_loss() const { return total() >= Rational(1); }

 private:
  std::vector<Rational> bounds_;
};

/// f = base + sum_i step_i * I[A_i] with A_1 > A_2 > ... strictly nested and
/// every step positive.
struct LevelSetDecomposition {
  struct Level {
    Rational step;
    OutcomeSet set;
  };

  Rational base;
  std::vector<Level> levels;

  /// Value of the decomposition at `outcome`.
  Rational evaluate(std::size_t outcome) const;
};

LevelSetDecomposition decompose(const Gamble& f);

/// min(sum_{w in A} pbar(w), 1)
Rational upper_event(const UpperPMF& pbar, std::span<const std::size_t> event);

/// max(0, 1 - sum_{w not in A} pbar(w))
Rational lower_event(const UpperPMF& pbar, std::span<const std::size_t> event);

/// Upper natural extension of `f` (Choquet integral against the upper
/// probability induced by `pbar`). Requires pbar.total() >= 1; otherwise
/// throws PreconditionError naming the deficit.
Rational upper_natural_extension(const UpperPMF& pbar, const Gamble& f);

/// -upper_natural_extension(pbar, -f)
Rational lower_natural_extension(const UpperPMF& pbar, const Gamble& f);

/// Complement of `event` within {0, ..., size-1}.
OutcomeSet complement(std::span<const std::size_t> event, std::size_t size);

}  // namespace sureloss
