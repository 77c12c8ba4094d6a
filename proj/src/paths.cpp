#include "casimir/paths.hpp"

#include <algorithm>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void extend(const IndexTuple& t, int current, int next_edge, EdgeSet used, int to,
            std::vector<EdgeSet>& out) {
  for (int j = next_edge; j < t.m(); ++j) {
    if (t[j] != current) continue;
    const EdgeSet with = used | (EdgeSet{1} << j);
    const int head = t.closed(static_cast<std::size_t>(j) + 1);
    if (head == to) out.push_back(with);
    extend(t, head, j + 1, with, to, out);
  }
}

}  // namespace

std::vector<EdgeSet> enumerate_paths(const IndexTuple& t, int from, int to) {
  if (t.m() > 63) throw InputError("path enumeration supports at most 63 edges");
  std::vector<EdgeSet> out;
  if (from == to) out.push_back(0);
  extend(t, from, 0, 0, to, out);
  std::sort(out.begin(), out.end());
  return out;
}

int degree_balance(const IndexTuple& t, EdgeSet s, int vertex) {
  int balance = 0;
  for (int j = 0; j < t.m(); ++j) {
    if (!(s >> j & 1)) continue;
    if (t.closed(static_cast<std::size_t>(j) + 1) == vertex) ++balance;
    if (t[j] == vertex) --balance;
  }
  return balance;
}

}  // namespace casimir
