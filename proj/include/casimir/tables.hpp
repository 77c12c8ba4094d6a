#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "casimir/mpoly.hpp"

namespace casimir {

/// One relative-order case of the order-2 or order-3 elementary eigenvalue
/// tables, for the shifted parameters beta_i = alpha_i + (n+1)/2 - i.
///
/// Polynomials live in the symbolic ring with variables
///   alpha_{i1}..alpha_{im}, i1..im, n     (2m + 1 variables, in that order).
struct TableRow {
  std::string label;           ///< e.g. "i1 < i2 = i3"
  std::vector<int> pattern;    ///< representative relative-order pattern
  MPoly computed;              ///< cycle-product value (alternating sign)
  std::string computed_text;   ///< factored form in beta notation
  MPoly reference;             ///< tabulated value
  std::string reference_text;
  bool matches = false;
  std::function<bool(const std::vector<int>&)> applies;  ///< case predicate on (i1..im)
};

/// Rows in tabulated order; a tuple belongs to the first row whose predicate
/// holds. Throws InputError unless m is 2 or 3.
std::vector<TableRow> elementary_table(int m);

/// Names of the symbolic ring's variables, for printing.
std::vector<std::string> table_variable_names(int m);

/// Sums the rows' values (computed, or tabulated when `use_reference`) over
/// every tuple in {1..n}^m, instantiating the symbolic variables. Result is a
/// polynomial in a1..an.
MPoly table_row_sum(const std::vector<TableRow>& rows, int m, int n, bool use_reference);

}  // namespace casimir
