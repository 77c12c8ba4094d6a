#include "casimir/cycles.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

MinPair min_pair(std::span<const int> values) {
  if (values.empty()) throw InputError("min_pair of an empty list");
  MinPair out;
  out.first = *std::min_element(values.begin(), values.end());
  for (int v : values) {
    if (v != out.first && (!out.second || v < *out.second)) out.second = v;
  }
  return out;
}

std::vector<Cycle> enumerate_cycles(const IndexTuple& t) {
  const auto closed = t.closed_tuple();
  const std::size_t m = static_cast<std::size_t>(t.m());
  std::vector<Cycle> out;
  for (std::size_t start = 0; start < m; ++start) {
    std::size_t end = start + 1;
    while (end <= m && closed[end] != closed[start]) ++end;
    if (end > m) continue;  // value does not recur
    const std::span<const int> window(closed.data() + start, end - start + 1);
    Cycle c;
    c.start = start;
    c.end = end;
    c.base = closed[start];
    c.minima = min_pair(window);
    c.proper = std::all_of(window.begin() + 1, window.end() - 1,
                           [&](int v) { return v > c.base; });
    out.push_back(c);
  }
  return out;
}

std::vector<Cycle> enumerate_proper_cycles(const IndexTuple& t) {
  auto cycles = enumerate_cycles(t);
  std::erase_if(cycles, [](const Cycle& c) { return !c.proper; });
  return cycles;
}

ElementaryProduct elementary_product(const IndexTuple& t, SignConvention sign) {
  ElementaryProduct prod;
  const int first = t[0];
  if (std::any_of(t.entries().begin(), t.entries().end(), [&](int v) { return v < first; })) {
    prod.zero = true;
    return prod;
  }
  if (sign == SignConvention::alternating && t.m() % 2 == 1) prod.sign = -1;
  for (const auto& c : enumerate_proper_cycles(t))
    prod.factors.push_back({c.minima.first, c.minima.second, c.base > first});
  return prod;
}

MPoly shifted_parameter(int n, int i) {
  const auto nvars = static_cast<std::size_t>(n);
  return MPoly::variable(nvars, static_cast<std::size_t>(i - 1)) +
         MPoly::constant(nvars, Rat(n + 1) / 2 - Rat(i));
}

MPoly elementary_eigenvalue(const IndexTuple& t, SignConvention sign, bool shifted) {
  const auto nvars = static_cast<std::size_t>(t.n());
  const auto prod = elementary_product(t, sign);
  if (shifted)
    return expand(prod, nvars, [&](int v) { return shifted_parameter(t.n(), v); });
  return expand(prod, nvars,
                [&](int v) { return MPoly::variable(nvars, static_cast<std::size_t>(v - 1)); });
}

}  // namespace casimir
