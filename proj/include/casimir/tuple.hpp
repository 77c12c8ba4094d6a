#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace casimir {

/// Index tuple (i_1, ..., i_m) with entries in 1..n. Positions are 0-based;
/// the closed tuple I = (i_1, ..., i_m, i_1) is derived on demand.
class IndexTuple {
 public:
  /// Throws InputError unless m >= 1, n >= 1 and every entry lies in 1..n.
  IndexTuple(std::vector<int> entries, int n);

  int m() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }

  /// Entry j of the closed tuple, j in 0..m; closed(m) == closed(0).
  int closed(std::size_t j) const { return entries_[j % entries_.size()]; }
  std::vector<int> closed_tuple() const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple& a, const IndexTuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int n_;
};

/// Parses "1,9,2,5" (whitespace around entries is allowed). Without an
/// explicit rank the largest entry is used.
IndexTuple parse_tuple(std::string_view csv, std::optional<int> n = std::nullopt);

/// Relative ordering of the tuple's values.
struct RelOrder {
  int ell = 0;                  ///< number of distinct values
  std::vector<int> rank;        ///< position -> rank in 0..ell-1
  std::vector<int> first_pos;   ///< rank -> least position carrying that rank
  std::vector<int> values;      ///< rank -> tuple value, increasing
};

RelOrder relative_order(const IndexTuple& t);

}  // namespace casimir
