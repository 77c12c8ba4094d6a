#include "casimir/oracle.hpp"

#include <algorithm>

#include "casimir/cycles.hpp"
#include "casimir/paths.hpp"

namespace casimir {

JetMatrix build_inverse_matrix(const IndexTuple& t) {
  const RelOrder order = relative_order(t);
  const int m = t.m();
  JetMatrix mat = JetMatrix::identity(order.ell, m, Rat(1));
  for (int j = 0; j < m; ++j) {
    const int from = order.rank[static_cast<std::size_t>(j)];
    const int to = order.rank[static_cast<std::size_t>((j + 1) % m)];
    const Jet<Rat> tj = Jet<Rat>::variable(m, j, Rat(1));
    // Right multiplication by (I - t_j E_{from,to}) only touches column `to`.
    for (int r = 0; r < order.ell; ++r) {
      const Jet<Rat> shift = jet_mul(mat(r, from), tj);
      mat(r, to) -= shift;
    }
  }
  return mat;
}

Jet<Rat> inner_product(const std::vector<Jet<Rat>>& a, const std::vector<Jet<Rat>>& b) {
  Jet<Rat> acc(a.front().m(), Rat(0));
  for (std::size_t r = 0; r < a.size(); ++r) acc += jet_mul(a[r], b[r]);
  return acc;
}

std::vector<Jet<Rat>> gram_schmidt_norms(const JetMatrix& columns) {
  const int size = columns.size();
  std::vector<std::vector<Jet<Rat>>> basis;
  std::vector<Jet<Rat>> norms;
  std::vector<Jet<Rat>> inverse_norms;
  for (int v = 0; v < size; ++v) {
    const auto a = columns.column(v);
    auto b = a;
    for (int k = 0; k < v; ++k) {
      const Jet<Rat> coeff = jet_mul(inner_product(a, basis[k]), inverse_norms[k]);
      for (int r = 0; r < size; ++r) b[r] -= jet_mul(coeff, basis[k][r]);
    }
    norms.push_back(inner_product(b, b));
    inverse_norms.push_back(jet_inv(norms.back()));
    basis.push_back(std::move(b));
  }
  return norms;
}

MPoly top_coefficient_of_product(const std::vector<Jet<MPoly>>& factors) {
  Jet<MPoly> partial = factors.front();
  for (std::size_t k = 1; k + 1 < factors.size(); ++k) partial = jet_mul(partial, factors[k]);
  if (factors.size() == 1) return partial[partial.full()];
  // Only the full-subset coefficient of the last product is needed.
  const Jet<MPoly>& last = factors.back();
  const Subset full = partial.full();
  MPoly top = zero_like(partial.zero());
  for (Subset s = 0;; ++s) {
    const Subset rest = full & ~s;
    if (!is_zero(partial[s]) && !is_zero(last[rest])) top += partial[s] * last[rest];
    if (s == full) break;
  }
  return top;
}

MPoly oracle_eigenvalue(const IndexTuple& t, bool shifted) {
  const RelOrder order = relative_order(t);
  const auto nvars = static_cast<std::size_t>(t.n());
  const auto norms = gram_schmidt_norms(build_inverse_matrix(t));
  std::vector<Jet<MPoly>> factors;
  for (int v = 0; v < order.ell; ++v) {
    const int value = order.values[static_cast<std::size_t>(v)];
    const MPoly x = shifted ? shifted_parameter(t.n(), value)
                            : MPoly::variable(nvars, static_cast<std::size_t>(value - 1));
    factors.push_back(jet_pow(norms[static_cast<std::size_t>(v)], x * (Rat(-1) / 2)));
  }
  return top_coefficient_of_product(factors);
}

PathCheckReport path_coefficient_check(const IndexTuple& t) {
  const RelOrder order = relative_order(t);
  const JetMatrix mat = build_inverse_matrix(t);
  PathCheckReport report;
  for (int v = 0; v < order.ell; ++v) {
    for (int w = 0; w < order.ell; ++w) {
      const int from = order.values[static_cast<std::size_t>(v)];
      const int to = order.values[static_cast<std::size_t>(w)];
      const auto paths = enumerate_paths(t, from, to);
      const Jet<Rat>& entry = mat(v, w);
      for (Subset s = 0;; ++s) {
        const bool is_path = std::binary_search(paths.begin(), paths.end(), EdgeSet{s});
        const Rat expected = is_path ? Rat(edge_count(s) % 2 == 0 ? 1 : -1) : Rat(0);
        ++report.coefficients_checked;
        if (entry[s] != expected) report.violations.push_back({from, to, s, expected, entry[s]});
        if (s == entry.full()) break;
      }
    }
  }
  return report;
}

}  // namespace casimir
