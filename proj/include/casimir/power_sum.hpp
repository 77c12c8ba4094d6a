#pragma once

#include <map>
#include <utility>
#include <vector>

#include "casimir/mpoly.hpp"

namespace casimir {

/// Integer partition with parts >= 2, stored non-increasing. The empty
/// partition stands for the constant term.
using Partition = std::vector<unsigned>;

/// Weight descending, then lexicographically descending, so iteration runs
/// p4, p2^2, p3, p2, constant.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of `weight` whose parts are all >= 2.
std::vector<Partition> partitions_min_part_two(unsigned weight);

/// Univariate polynomial in the rank symbol n, coefficients in ascending powers.
using UPoly = std::vector<Rat>;

Rat eval(const UPoly& p, const Rat& x);

/// Symmetric polynomial in the power sums p_k = sum_i a_i^k (k >= 2).
class PowerSumPoly {
 public:
  using CoeffMap = std::map<Partition, Rat, PartitionOrder>;

  PowerSumPoly() = default;

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coefficient(const Partition& lambda) const;

  /// Adds c * p_lambda; lambda is sorted into canonical order first.
  void add(Partition lambda, const Rat& c);

  /// Expands into a polynomial in a1..an.
  MPoly to_mpoly(std::size_t n) const;

  friend bool operator==(const PowerSumPoly&, const PowerSumPoly&) = default;

 private:
  CoeffMap coeffs_;
};

/// p_lambda = prod_k p_{lambda_k} as a polynomial in n variables.
MPoly power_sum_product(const Partition& lambda, std::size_t n);

/// Rewrites `p` (n variables) in the power-sum basis on the hyperplane
/// a1 + ... + an = 0. The last variable is eliminated and the remainder is
/// matched against the images of p_lambda by an exact linear solve. Throws
/// NotSymmetric when no representation exists.
PowerSumPoly to_power_sum(const MPoly& p, std::size_t n);

/// Power-sum polynomial whose coefficients are polynomials in the rank n.
class ClosedForm {
 public:
  using CoeffMap = std::map<Partition, UPoly, PartitionOrder>;

  ClosedForm() = default;

  const CoeffMap& coeffs() const { return coeffs_; }

  /// Stores c(n) for p_lambda; trailing zeros are trimmed and zero entries dropped.
  void set(Partition lambda, UPoly c);

  PowerSumPoly at(const Rat& n) const;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

 private:
  CoeffMap coeffs_;
};

struct RankSample {
  unsigned n;
  PowerSumPoly value;
};

/// Lagrange-interpolates every partition coefficient as a polynomial in n of
/// degree <= degree_bound from the first degree_bound + 1 samples, then checks
/// the remaining samples. Throws InputError when fewer than degree_bound + 1
/// distinct ranks are given, InterpolationInconsistent on a residual.
ClosedForm interpolate_in_n(const std::vector<RankSample>& samples, unsigned degree_bound);

}  // namespace casimir
