#include "casimir/casimir.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

#include "casimir/errors.hpp"
#include "casimir/oracle.hpp"

namespace casimir {

namespace {

unsigned worker_count(unsigned requested, std::size_t work_items) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work_items < threads) threads = static_cast<unsigned>(std::max<std::size_t>(1, work_items));
  return threads;
}

// Runs fn(begin, end) over contiguous chunks of [0, count) and returns the
// per-chunk results in chunk order, so any later reduction is deterministic.
template <class Fn>
auto parallel_chunks(std::size_t count, unsigned requested_threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}, std::size_t{0}));
  const unsigned threads = worker_count(requested_threads, count);
  std::vector<Result> results(threads);
  if (threads == 1) {
    results[0] = fn(0, count);
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) {
    const std::size_t begin = count * k / threads;
    const std::size_t end = count * (k + 1) / threads;
    pool.emplace_back([&, k, begin, end] { results[k] = fn(begin, end); });
  }
  for (auto& th : pool) th.join();
  return results;
}

void check_request(const CasimirRequest& req) {
  if (req.m < 1) throw InputError("order m must be at least 1");
  if (req.n < 1) throw InputError("rank n must be at least 1");
}

std::vector<int> tuple_at(std::size_t index, int m, int n) {
  std::vector<int> entries(static_cast<std::size_t>(m));
  for (int j = m - 1; j >= 0; --j) {
    entries[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(n)) + 1;
    index /= static_cast<std::size_t>(n);
  }
  return entries;
}

std::size_t tuple_count(int m, int n) {
  std::size_t total = 1;
  for (int j = 0; j < m; ++j) total *= static_cast<std::size_t>(n);
  return total;
}

std::vector<MPoly> parameters(int n, bool shifted) {
  std::vector<MPoly> out;
  const auto nvars = static_cast<std::size_t>(n);
  for (int v = 1; v <= n; ++v)
    out.push_back(shifted ? shifted_parameter(n, v)
                          : MPoly::variable(nvars, static_cast<std::size_t>(v - 1)));
  return out;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<IndexTuple> all_tuples(int m, int n) {
  std::vector<IndexTuple> out;
  const std::size_t total = tuple_count(m, n);
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) out.emplace_back(tuple_at(k, m, n), n);
  return out;
}

MPoly casimir_eigenvalue(const CasimirRequest& req) {
  check_request(req);
  const auto nvars = static_cast<std::size_t>(req.n);
  const auto partials =
      parallel_chunks(tuple_count(req.m, req.n), req.threads, [&](std::size_t begin, std::size_t end) {
        MPoly acc(nvars);
        for (std::size_t k = begin; k < end; ++k)
          acc += elementary_eigenvalue(IndexTuple(tuple_at(k, req.m, req.n), req.n), req.sign,
                                       req.shifted);
        return acc;
      });
  MPoly total(nvars);
  for (const auto& p : partials) total += p;
  return total;
}

std::vector<std::vector<int>> relative_order_patterns(int m, int max_ranks) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  const int top = std::min(m, max_ranks);
  for (int ell = 1; ell <= top; ++ell) {
    std::vector<int> used(static_cast<std::size_t>(ell), 0);
    int missing = ell;
    std::function<void()> rec = [&] {
      const int remaining = m - static_cast<int>(current.size());
      if (remaining == 0) {
        if (missing == 0) out.push_back(current);
        return;
      }
      if (missing > remaining) return;
      for (int r = 0; r < ell; ++r) {
        auto& u = used[static_cast<std::size_t>(r)];
        if (u++ == 0) --missing;
        current.push_back(r);
        rec();
        current.pop_back();
        if (--u == 0) ++missing;
      }
    };
    rec();
  }
  return out;
}

MPoly casimir_eigenvalue_patterned(const CasimirRequest& req, PatternStats* stats) {
  check_request(req);
  const auto nvars = static_cast<std::size_t>(req.n);
  const auto patterns = relative_order_patterns(req.m, req.n);
  const auto params = parameters(req.n, req.shifted);

  PatternStats local;
  local.patterns = patterns.size();
  std::vector<ElementaryProduct> products;
  std::vector<int> ranks_used;
  for (const auto& pattern : patterns) {
    const int ell = *std::max_element(pattern.begin(), pattern.end()) + 1;
    if (pattern.front() != 0) {
      ++local.zero_patterns;
      local.tuples_skipped += choose(req.n, ell);
      continue;
    }
    std::vector<int> entries;
    for (int r : pattern) entries.push_back(r + 1);
    products.push_back(elementary_product(IndexTuple(std::move(entries), ell), req.sign));
    ranks_used.push_back(ell);
  }
  if (stats) *stats = local;

  const auto partials =
      parallel_chunks(products.size(), req.threads, [&](std::size_t begin, std::size_t end) {
        MPoly acc(nvars);
        for (std::size_t k = begin; k < end; ++k) {
          for_each_combination(req.n, ranks_used[k], [&](const std::vector<int>& values) {
            acc += expand(products[k], nvars, [&](int rank) -> const MPoly& {
              return params[static_cast<std::size_t>(values[static_cast<std::size_t>(rank - 1)] - 1)];
            });
          });
        }
        return acc;
      });
  MPoly total(nvars);
  for (const auto& p : partials) total += p;
  return total;
}

ClosedForm closed_form(int m, unsigned threads) {
  if (m < 1) throw InputError("order m must be at least 1");
  std::vector<RankSample> samples;
  for (int n = m; n <= 2 * m + 2; ++n) {
    CasimirRequest req;
    req.m = m;
    req.n = n;
    req.threads = threads;
    const MPoly value = casimir_eigenvalue_patterned(req);
    samples.push_back({static_cast<unsigned>(n), to_power_sum(value, static_cast<std::size_t>(n))});
  }
  return interpolate_in_n(samples, static_cast<unsigned>(m + 1));
}

std::vector<IndexTuple> VerifyReport::mismatches(SignConvention sign) const {
  std::vector<IndexTuple> out;
  for (const auto& r : records) {
    const bool ok = sign == SignConvention::literal ? r.match_literal : r.match_alternating;
    if (!ok) out.push_back(r.tuple);
  }
  return out;
}

std::string VerifyReport::consistent_convention() const {
  bool literal = true;
  bool alternating = true;
  for (const auto& r : records) {
    literal = literal && r.match_literal;
    alternating = alternating && r.match_alternating;
  }
  if (literal && alternating) return "both";
  if (literal) return "literal";
  if (alternating) return "alternating";
  return "none";
}

VerifyReport verify_tuples(int m, int n, const VerifySelection& selection, bool shifted,
                           unsigned threads) {
  if (m < 1) throw InputError("order m must be at least 1");
  if (n < 1) throw InputError("rank n must be at least 1");
  if (m > kMaxJetVariables)
    throw InputError("oracle supports at most " + std::to_string(kMaxJetVariables) + " factors");

  std::vector<IndexTuple> tuples;
  if (selection.exhaustive) {
    tuples = all_tuples(m, n);
  } else {
    std::mt19937_64 rng(selection.seed);
    for (std::size_t k = 0; k < selection.count; ++k) {
      std::vector<int> entries;
      for (int j = 0; j < m; ++j)
        entries.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1);
      tuples.emplace_back(std::move(entries), n);
    }
    std::sort(tuples.begin(), tuples.end());
  }

  auto chunks = parallel_chunks(tuples.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<TupleRecord> out;
    for (std::size_t k = begin; k < end; ++k) {
      const IndexTuple& t = tuples[k];
      TupleRecord rec{t, elementary_eigenvalue(t, SignConvention::literal, shifted),
                      elementary_eigenvalue(t, SignConvention::alternating, shifted),
                      oracle_eigenvalue(t, shifted)};
      rec.match_literal = rec.fast_literal == rec.oracle;
      rec.match_alternating = rec.fast_alternating == rec.oracle;
      rec.zero = rec.oracle.is_zero() && rec.fast_literal.is_zero() &&
                 rec.fast_alternating.is_zero();
      out.push_back(std::move(rec));
    }
    return out;
  });

  VerifyReport report;
  report.m = m;
  report.n = n;
  report.shifted = shifted;
  for (auto& chunk : chunks)
    for (auto& rec : chunk) report.records.push_back(std::move(rec));
  report.total = report.records.size();
  for (const auto& r : report.records) {
    if (r.zero) {
      ++report.zero;
      continue;
    }
    if (r.match_literal) ++report.match_literal;
    if (r.match_alternating) ++report.match_alternating;
  }
  return report;
}

}  // namespace casimir
