#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "casimir/mpoly.hpp"
#include "casimir/tuple.hpp"

namespace casimir {

/// First and second minimum of a value set. `second` is empty (the INF
/// marker) when the set is a singleton; INF contributes a zero parameter.
struct MinPair {
  int first = 0;
  std::optional<int> second;

  friend bool operator==(const MinPair&, const MinPair&) = default;
};

/// Throws InputError on empty input.
MinPair min_pair(std::span<const int> values);

/// Contiguous sub-list I[start..end] of the closed tuple with I[start] == I[end].
struct Cycle {
  std::size_t start = 0;  ///< 0-based position in the closed tuple
  std::size_t end = 0;    ///< start < end <= m
  int base = 0;
  MinPair minima;
  bool proper = false;    ///< every interior value exceeds base
};

/// Every cycle spanned by two consecutive occurrences of a value in the
/// closed tuple, ordered by start position. Proper cycles are a subset.
std::vector<Cycle> enumerate_cycles(const IndexTuple& t);

/// The proper cycles of the closed tuple, ordered by start position.
std::vector<Cycle> enumerate_proper_cycles(const IndexTuple& t);

enum class SignConvention { literal, alternating };

/// One linear factor  -x[v1] + x[v2] (+ 1 when the cycle's base exceeds i_1).
struct CycleFactor {
  int v1 = 0;
  std::optional<int> v2;
  bool plus_one = false;
};

/// Factored eigenvalue of an elementary operator: zero, or sign * prod(factors).
struct ElementaryProduct {
  bool zero = false;
  int sign = 1;
  std::vector<CycleFactor> factors;
};

ElementaryProduct elementary_product(const IndexTuple& t, SignConvention sign);

/// beta_i = a_i + (n + 1)/2 - i in the ring of n variables.
MPoly shifted_parameter(int n, int i);

/// Expands a factored eigenvalue. `param(v)` returns the polynomial standing
/// for x_v; x_INF is 0.
template <class ParamFn>
MPoly expand(const ElementaryProduct& prod, std::size_t nvars, ParamFn&& param) {
  if (prod.zero) return MPoly(nvars);
  MPoly result = MPoly::constant(nvars, Rat(prod.sign));
  for (const auto& f : prod.factors) {
    MPoly factor = -param(f.v1);
    if (f.v2) factor += param(*f.v2);
    if (f.plus_one) factor += MPoly::constant(nvars, Rat(1));
    result *= factor;
  }
  return result;
}

/// Eigenvalue of D_{i1,i2} o ... o D_{im,i1} on the power function, as a
/// polynomial in a1..an. With `shifted`, every parameter x_v is beta_v.
MPoly elementary_eigenvalue(const IndexTuple& t, SignConvention sign, bool shifted);

}  // namespace casimir
