#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "casimir/casimir.hpp"
#include "casimir/cycles.hpp"
#include "casimir/errors.hpp"
#include "casimir/paths.hpp"
#include "casimir/tuple.hpp"
#include "support.hpp"

using namespace casimir;
using namespace casimir::testing;

namespace {

const IndexTuple kExample = parse_tuple("1,9,2,5,5,9,6,8,4,5");

// Edge j (1-based) runs from i_j to i_{j+1}; S is an edge-increasing walk v -> w.
bool brute_force_is_path(const IndexTuple& t, EdgeSet s, int v, int w) {
  int at = v;
  for (int j = 1; j <= t.m(); ++j) {
    if (!(s >> (j - 1) & 1)) continue;
    if (t.closed(static_cast<std::size_t>(j - 1)) != at) return false;
    at = t.closed(static_cast<std::size_t>(j));
  }
  return at == w;
}

std::vector<IndexTuple> small_tuples(int max_m, int max_n) {
  std::vector<IndexTuple> out;
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n)
      for (auto& t : all_tuples(m, n)) out.push_back(t);
  return out;
}

}  // namespace

TEST_CASE("tuple validation and parsing") {
  CHECK(kExample.m() == 10);
  CHECK(kExample.n() == 9);
  CHECK(parse_tuple("1,2", 5).n() == 5);
  CHECK(kExample.closed_tuple() == std::vector<int>{1, 9, 2, 5, 5, 9, 6, 8, 4, 5, 1});
  CHECK_THROWS_AS(parse_tuple(""), InputError);
  CHECK_THROWS_AS(parse_tuple("1,x"), InputError);
  CHECK_THROWS_AS(parse_tuple("0,1"), InputError);
  CHECK_THROWS_AS(parse_tuple("3,1", 2), InputError);
}

TEST_CASE("relative order") {
  const RelOrder r = relative_order(kExample);
  CHECK(r.ell == 7);
  CHECK(r.values == std::vector<int>{1, 2, 4, 5, 6, 8, 9});
  CHECK(r.rank[3] == 3);  // value 5 is fourth smallest (0-based rank 3)

  const RelOrder same = relative_order(parse_tuple("3,3,3"));
  CHECK(same.ell == 1);
  CHECK(same.rank == std::vector<int>{0, 0, 0});
  CHECK(same.first_pos == std::vector<int>{0});

  const RelOrder two = relative_order(parse_tuple("7,2"));
  CHECK(two.rank == std::vector<int>{1, 0});
  CHECK(two.first_pos == std::vector<int>{1, 0});
}

TEST_CASE("relative order invariants") {
  for (const auto& t : small_tuples(4, 4)) {
    const RelOrder r = relative_order(t);
    for (int k = 0; k < r.ell; ++k) {
      const auto pos = static_cast<std::size_t>(r.first_pos[static_cast<std::size_t>(k)]);
      CHECK(r.rank[pos] == k);  // rank o first_pos = identity
      for (std::size_t j = 0; j < pos; ++j) CHECK(r.rank[j] != k);
    }
  }
}

TEST_CASE("min pair") {
  CHECK(min_pair(std::vector<int>{9, 2, 5, 5, 9}) == MinPair{2, 5});
  CHECK(min_pair(std::vector<int>{5, 5}) == MinPair{5, std::nullopt});
  CHECK(min_pair(std::vector<int>{1, 9, 2, 5, 5, 9, 6, 8, 4, 5, 1}) == MinPair{1, 2});
  CHECK_THROWS_AS(min_pair(std::vector<int>{}), InputError);
}

TEST_CASE("cycles of the worked example") {
  const auto all = enumerate_cycles(kExample);
  REQUIRE(all.size() == 4);
  CHECK(std::count_if(all.begin(), all.end(), [](const Cycle& c) { return c.proper; }) == 2);
  CHECK(all[1].minima == MinPair{2, 5});
  CHECK(!all[1].proper);
  CHECK(all[3].minima == MinPair{4, 5});

  const auto proper = enumerate_proper_cycles(kExample);
  REQUIRE(proper.size() == 2);
  CHECK(proper[0].start == 0);
  CHECK(proper[0].end == 10);
  CHECK(proper[0].base == 1);
  CHECK(proper[0].minima == MinPair{1, 2});
  CHECK(proper[1].start == 3);
  CHECK(proper[1].end == 4);
  CHECK(proper[1].minima == MinPair{5, std::nullopt});
}

TEST_CASE("small proper-cycle cases") {
  const auto loops = enumerate_proper_cycles(parse_tuple("1,1"));
  REQUIRE(loops.size() == 2);
  CHECK(loops[0].start == 0);
  CHECK(loops[0].end == 1);
  CHECK(loops[1].start == 1);
  CHECK(loops[1].end == 2);

  const auto up = enumerate_proper_cycles(parse_tuple("1,2"));
  REQUIRE(up.size() == 1);
  CHECK(up[0].minima == MinPair{1, 2});
}

TEST_CASE("elementary eigenvalue examples") {
  const std::size_t n = 9;
  const MPoly expected = (-a(n, 1) + a(n, 2)) * (-a(n, 5) + c(n, 1));
  CHECK(elementary_eigenvalue(kExample, SignConvention::literal, false) == expected);
  CHECK(elementary_eigenvalue(kExample, SignConvention::alternating, false) == expected);

  for (auto sign : {SignConvention::literal, SignConvention::alternating})
    for (bool shifted : {true, false})
      CHECK(elementary_eigenvalue(parse_tuple("2,1"), sign, shifted).is_zero());

  for (int rank : {1, 2, 5}) {
    const auto nn = static_cast<std::size_t>(rank);
    const MPoly beta = a(nn, 1) + c(nn, Rat(rank + 1) / 2 - 1);
    CHECK(elementary_eigenvalue(parse_tuple("1,1", rank), SignConvention::alternating, true) ==
          pow(beta, 2));
  }

  CHECK(elementary_eigenvalue(parse_tuple("1"), SignConvention::literal, false) == -a(1, 1));
  CHECK(elementary_eigenvalue(parse_tuple("1"), SignConvention::alternating, false) == a(1, 1));
}

TEST_CASE("proper-cycle and eigenvalue invariants") {
  for (const auto& t : small_tuples(5, 4)) {
    CAPTURE(t.entries().size());
    const auto proper = enumerate_proper_cycles(t);
    const auto closed = t.closed_tuple();
    for (const auto& cyc : proper) {
      CHECK(closed[cyc.start] == cyc.base);
      CHECK(closed[cyc.end] == cyc.base);
      CHECK(cyc.minima.first == cyc.base);
      std::set<int> seen(closed.begin() + static_cast<long>(cyc.start),
                         closed.begin() + static_cast<long>(cyc.end) + 1);
      for (std::size_t k = cyc.start + 1; k < cyc.end; ++k) CHECK(closed[k] > cyc.base);
      CHECK(cyc.minima.second.has_value() == (seen.size() > 1));
    }
    const bool below_first =
        std::any_of(t.entries().begin(), t.entries().end(), [&](int v) { return v < t[0]; });
    for (auto sign : {SignConvention::literal, SignConvention::alternating}) {
      const MPoly value = elementary_eigenvalue(t, sign, false);
      CHECK(value.is_zero() == below_first);  // zero law
      CHECK(value.degree() <= static_cast<int>(proper.size()));
      CHECK(static_cast<int>(proper.size()) <= t.m());
    }
    if (t.m() % 2 == 0)
      CHECK(elementary_eigenvalue(t, SignConvention::literal, true) ==
            elementary_eigenvalue(t, SignConvention::alternating, true));
  }
}

TEST_CASE("relative-order covariance of the unshifted eigenvalue") {
  std::mt19937_64 rng(17);
  for (const auto& t : small_tuples(4, 4)) {
    // order-preserving injection of 1..n into 1..9
    std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> image(pool.begin(), pool.begin() + t.n());
    std::sort(image.begin(), image.end());
    std::vector<int> moved;
    for (int v : t.entries()) moved.push_back(image[static_cast<std::size_t>(v - 1)]);
    std::vector<std::size_t> rename;
    for (int v : image) rename.push_back(static_cast<std::size_t>(v - 1));
    const IndexTuple u(moved, 9);
    CHECK(elementary_eigenvalue(t, SignConvention::alternating, false).rename(rename, 9) ==
          elementary_eigenvalue(u, SignConvention::alternating, false));
  }
}

TEST_CASE("path enumeration examples") {
  const auto t = parse_tuple("1,2");
  CHECK(enumerate_paths(t, 1, 2) == std::vector<EdgeSet>{0b01});
  CHECK(enumerate_paths(t, 1, 1) == std::vector<EdgeSet>{0b00, 0b11});
  const auto to9 = enumerate_paths(kExample, 5, 9);
  CHECK(std::find(to9.begin(), to9.end(), EdgeSet{0b11000}) != to9.end());
}

TEST_CASE("degree balance") {
  const auto t = parse_tuple("1,2");
  CHECK(degree_balance(t, 0b01, 1) == -1);
  CHECK(degree_balance(t, 0b11, 1) == 0);
  CHECK(degree_balance(parse_tuple("1,1"), 0b01, 1) == 0);
}

TEST_CASE("path enumeration agrees with brute force over all edge subsets") {
  auto tuples = small_tuples(5, 4);
  tuples.push_back(kExample);
  for (const auto& t : tuples) {
    const RelOrder r = relative_order(t);
    for (int v : r.values) {
      for (int w : r.values) {
        std::vector<EdgeSet> expected;
        for (EdgeSet s = 0; s < (EdgeSet{1} << t.m()); ++s) {
          if (!brute_force_is_path(t, s, v, w)) continue;
          expected.push_back(s);
          // the necessary balance condition
          for (int u : r.values) {
            const int want = (u == w ? 1 : 0) - (u == v ? 1 : 0);
            CHECK(degree_balance(t, s, u) == want);
          }
        }
        CHECK(enumerate_paths(t, v, w) == expected);
      }
    }
  }
}
