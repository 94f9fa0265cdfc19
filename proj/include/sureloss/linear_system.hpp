#pragma once

#include "sureloss/rational.hpp"

#include <optional>
#include <vector>

namespace sureloss {

using Matrix = std::vector<std::vector<Rational>>;

/// General solution of A x = b: particular + span(nullspace).
struct LinearSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;

  bool unique() const { return nullspace.empty(); }
};

/// Exact Gauss-Jordan elimination. Returns nullopt when the system is
/// inconsistent. Free variables are set to zero in `particular`.
/// Throws DomainError if the shapes disagree.
std::optional<LinearSolution> solve_linear_system(Matrix a, std::vector<Rational> b);

}  // namespace sureloss
