#include "sureloss/linear_system.hpp"

#include "sureloss/errors.hpp"

#include <utility>

namespace sureloss {

std::optional<LinearSolution> solve_linear_system(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("right-hand side length differs from row count");
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != cols) throw DomainError("ragged coefficient matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);

    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational factor = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
      b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;

  LinearSolution out;
  out.particular.assign(cols, Rational(0));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.particular[pivot_cols[i]] = b[i];
    is_pivot[pivot_cols[i]] = true;
  }

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> direction(cols, Rational(0));
    direction[free] = Rational(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) direction[pivot_cols[i]] = -a[i][free];
    out.nullspace.push_back(std::move(direction));
  }
  return out;
}

}  // namespace sureloss
