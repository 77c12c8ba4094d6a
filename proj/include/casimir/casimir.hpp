#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casimir/cycles.hpp"
#include "casimir/mpoly.hpp"
#include "casimir/power_sum.hpp"
#include "casimir/tuple.hpp"

namespace casimir {

enum class Basis { monomial, power_sum };

struct CasimirRequest {
  int m = 2;
  int n = 2;
  bool shifted = true;
  Basis basis = Basis::monomial;
  SignConvention sign = SignConvention::alternating;
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// The closed forms are only claimed for 1 <= m <= n; larger orders are
/// computed but flagged.
inline bool outside_stated_range(int m, int n) { return m > n; }

/// Sum of elementary eigenvalues over every tuple in {1..n}^m.
MPoly casimir_eigenvalue(const CasimirRequest& req);

struct PatternStats {
  std::size_t patterns = 0;       ///< relative-order patterns of length m
  std::size_t zero_patterns = 0;  ///< patterns whose first entry is not the minimum
  std::size_t tuples_skipped = 0; ///< tuples covered by zero patterns
};

/// Same value as casimir_eigenvalue, grouping tuples by relative order: the
/// proper cycles are analysed once per pattern and the resulting factors are
/// instantiated for every choice of increasing values.
MPoly casimir_eigenvalue_patterned(const CasimirRequest& req, PatternStats* stats = nullptr);

/// Closed form in the rank n: samples n = m .. 2m+2, reduces each to power
/// sums and interpolates with degree bound m + 1.
ClosedForm closed_form(int m, unsigned threads = 0);

/// Relative-order patterns of length m: sequences over 0..ell-1 that use
/// every rank, for every ell in 1..min(m, n).
std::vector<std::vector<int>> relative_order_patterns(int m, int max_ranks);

struct TupleRecord {
  IndexTuple tuple;
  MPoly fast_literal;
  MPoly fast_alternating;
  MPoly oracle;
  bool match_literal = false;
  bool match_alternating = false;
  bool zero = false;  ///< oracle and both fast values vanish
};

struct VerifySelection {
  bool exhaustive = true;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static VerifySelection all() { return {}; }
  static VerifySelection random(std::size_t count, std::uint64_t seed) {
    return {false, count, seed};
  }
};

struct VerifyReport {
  int m = 0;
  int n = 0;
  bool shifted = true;
  std::vector<TupleRecord> records;  ///< lexicographic tuple order
  std::size_t total = 0;
  std::size_t zero = 0;
  std::size_t match_literal = 0;      ///< nonzero tuples matching the literal product
  std::size_t match_alternating = 0;  ///< nonzero tuples matching the (-1)^m product

  std::size_t nonzero() const { return total - zero; }
  /// Tuples whose fast value under `sign` differs from the oracle.
  std::vector<IndexTuple> mismatches(SignConvention sign) const;
  /// "literal", "alternating", "both" or "none": which conventions agree
  /// with the oracle on every tuple.
  std::string consistent_convention() const;
};

/// Compares the cycle-product eigenvalue under both sign conventions with
/// the jet oracle. Random selection draws entries from a seeded mt19937_64.
VerifyReport verify_tuples(int m, int n, const VerifySelection& selection, bool shifted = true,
                           unsigned threads = 0);

/// Every tuple of {1..n}^m in lexicographic order.
std::vector<IndexTuple> all_tuples(int m, int n);

}  // namespace casimir
