#include "casimir/tuple.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

IndexTuple::IndexTuple(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  if (entries_.empty()) throw InputError("index tuple must have at least one entry");
  if (n_ < 1) throw InputError("rank must be at least 1");
  for (int v : entries_) {
    if (v < 1 || v > n_)
      throw InputError("tuple entry " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

std::vector<int> IndexTuple::closed_tuple() const {
  std::vector<int> out(entries_);
  out.push_back(entries_.front());
  return out;
}

IndexTuple parse_tuple(std::string_view csv, std::optional<int> n) {
  std::vector<int> entries;
  while (true) {
    const auto comma = csv.find(',');
    auto field = csv.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw InputError("malformed tuple entry '" + std::string(field) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  const int rank = n.value_or(*std::max_element(entries.begin(), entries.end()));
  return IndexTuple(std::move(entries), rank);
}

RelOrder relative_order(const IndexTuple& t) {
  RelOrder r;
  r.values.assign(t.entries().begin(), t.entries().end());
  std::sort(r.values.begin(), r.values.end());
  r.values.erase(std::unique(r.values.begin(), r.values.end()), r.values.end());
  r.ell = static_cast<int>(r.values.size());
  r.first_pos.assign(r.values.size(), -1);
  r.rank.reserve(static_cast<std::size_t>(t.m()));
  for (int j = 0; j < t.m(); ++j) {
    const auto rank = static_cast<int>(
        std::lower_bound(r.values.begin(), r.values.end(), t[j]) - r.values.begin());
    r.rank.push_back(rank);
    if (r.first_pos[rank] < 0) r.first_pos[rank] = j;
  }
  return r;
}

}  // namespace casimir
