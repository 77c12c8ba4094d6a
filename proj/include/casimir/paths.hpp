#pragma once

#include <cstdint>
#include <vector>

#include "casimir/tuple.hpp"

namespace casimir {

/// Set of edges of the tuple's multigraph: bit j-1 stands for edge
/// e_j = (i_j -> i_{j+1}).
using EdgeSet = std::uint64_t;

inline int edge_count(EdgeSet s) { return __builtin_popcountll(s); }

/// All edge sets {j_1 < ... < j_k} that walk from vertex `from` to vertex
/// `to` using edges in increasing order. The empty set is included exactly
/// when from == to. Sorted ascending by bitmask.
std::vector<EdgeSet> enumerate_paths(const IndexTuple& t, int from, int to);

/// in_v(S) - out_v(S).
int degree_balance(const IndexTuple& t, EdgeSet s, int vertex);

}  // namespace casimir
