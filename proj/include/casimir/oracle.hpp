#pragma once

#include <cstddef>
#include <vector>

#include "casimir/jet.hpp"
#include "casimir/tuple.hpp"

namespace casimir {

/// Square matrix of jets, row-major. Row/column v corresponds to the v-th
/// smallest distinct value of the tuple.
template <class Scalar>
class JetMatrixT {
 public:
  JetMatrixT(int size, int m, const Scalar& zero)
      : size_(size), entries_(static_cast<std::size_t>(size * size), Jet<Scalar>(m, zero)) {}

  static JetMatrixT identity(int size, int m, const Scalar& one) {
    JetMatrixT id(size, m, zero_like(one));
    for (int v = 0; v < size; ++v) id(v, v) = Jet<Scalar>::constant(m, one);
    return id;
  }

  int size() const { return size_; }
  Jet<Scalar>& operator()(int row, int col) { return entries_[index(row, col)]; }
  const Jet<Scalar>& operator()(int row, int col) const { return entries_[index(row, col)]; }

  std::vector<Jet<Scalar>> column(int col) const {
    std::vector<Jet<Scalar>> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 0; r < size_; ++r) out.push_back((*this)(r, col));
    return out;
  }

  friend bool operator==(const JetMatrixT&, const JetMatrixT&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(col);
  }

  int size_;
  std::vector<Jet<Scalar>> entries_;
};

using JetMatrix = JetMatrixT<Rat>;

/// Inverse of the deformed group element restricted to the tuple's values:
/// the ordered product over j = 1..m of (I - t_j E_{rank(j), rank(j+1)}).
/// Loop factors -t_j/(1+t_j) reduce to -t_j in the truncated algebra.
JetMatrix build_inverse_matrix(const IndexTuple& t);

/// Sum over rows of a[r] * b[r].
Jet<Rat> inner_product(const std::vector<Jet<Rat>>& a, const std::vector<Jet<Rat>>& b);

/// Classical Gram-Schmidt on the columns of M carried out in the jet
/// algebra; returns <b_v, b_v> for every column v.
std::vector<Jet<Rat>> gram_schmidt_norms(const JetMatrix& columns);

/// Coefficient of t_1...t_m in prod_v <b_v,b_v>^(-x_v / 2), where x_v is the
/// parameter of the v-th smallest value (a_i, or the shifted beta_i).
MPoly oracle_eigenvalue(const IndexTuple& t, bool shifted);

/// Coefficient of t_1...t_m in the product of the given jets.
MPoly top_coefficient_of_product(const std::vector<Jet<MPoly>>& factors);

struct PathViolation {
  int from = 0;       ///< tuple value of the row
  int to = 0;         ///< tuple value of the column
  Subset subset = 0;
  Rat expected;
  Rat actual;
};

struct PathCheckReport {
  std::size_t coefficients_checked = 0;
  std::vector<PathViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that every coefficient of build_inverse_matrix(t) is (-1)^|S| when
/// S is an edge-increasing path between the entry's vertices and 0 otherwise.
PathCheckReport path_coefficient_check(const IndexTuple& t);

}  // namespace casimir
