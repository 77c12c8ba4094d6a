#include "linear_solve.hpp"

#include <utility>

namespace casimir::detail {

std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> rows,
                                            std::vector<Rat> rhs, std::size_t unknowns) {
  const std::size_t nrows = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && is_zero(rows[p][c])) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = Rat(1) / rows[r][c];
    for (std::size_t k = c; k < unknowns; ++k) rows[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const Rat f = rows[i][c];
      for (std::size_t k = c; k < unknowns; ++k) rows[i][k] -= f * rows[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (!is_zero(rhs[i])) return std::nullopt;
  std::vector<Rat> x(unknowns, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace casimir::detail
