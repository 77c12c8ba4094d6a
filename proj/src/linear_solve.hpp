#pragma once

#include <optional>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir::detail {

/// Solves rows * x = rhs exactly by Gauss-Jordan elimination. Free unknowns
/// are set to zero. Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> rows,
                                            std::vector<Rat> rhs, std::size_t unknowns);

}  // namespace casimir::detail
