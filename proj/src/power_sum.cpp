#include "casimir/power_sum.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "casimir/errors.hpp"
#include "linear_solve.hpp"

namespace casimir {

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
  const auto wa = std::accumulate(a.begin(), a.end(), 0u);
  const auto wb = std::accumulate(b.begin(), b.end(), 0u);
  if (wa != wb) return wa > wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Partition> partitions_min_part_two(unsigned weight) {
  std::vector<Partition> out;
  Partition current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 2; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(weight, weight);
  return out;
}

Rat eval(const UPoly& p, const Rat& x) {
  Rat acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat PowerSumPoly::coefficient(const Partition& lambda) const {
  const auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void PowerSumPoly::add(Partition lambda, const Rat& c) {
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  if (!lambda.empty() && lambda.back() < 2)
    throw InputError("power-sum partitions must have parts >= 2");
  if (casimir::is_zero(c)) return;
  auto [it, inserted] = coeffs_.try_emplace(std::move(lambda), c);
  if (!inserted) {
    it->second += c;
    if (casimir::is_zero(it->second)) coeffs_.erase(it);
  }
}

MPoly power_sum_product(const Partition& lambda, std::size_t n) {
  MPoly result = MPoly::constant(n, Rat(1));
  for (unsigned k : lambda) {
    MPoly pk(n);
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = k;
      pk.add_term(e, Rat(1));
    }
    result *= pk;
  }
  return result;
}

MPoly PowerSumPoly::to_mpoly(std::size_t n) const {
  MPoly result(n);
  for (const auto& [lambda, c] : coeffs_) result += power_sum_product(lambda, n) * c;
  return result;
}

PowerSumPoly to_power_sum(const MPoly& p, std::size_t n) {
  if (n == 0) throw InputError("rank must be at least 1");
  if (p.nvars() != n)
    throw InputError("polynomial has " + std::to_string(p.nvars()) +
                     " variables, rank is " + std::to_string(n));
  PowerSumPoly result;
  if (p.is_zero()) return result;

  // a_n := -(a_1 + ... + a_{n-1})
  std::vector<MPoly> images;
  MPoly last(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    images.push_back(MPoly::variable(n, i));
    last -= images.back();
  }
  images.push_back(last);
  const MPoly target = p.substitute(images);

  const auto degree = static_cast<unsigned>(p.degree());
  std::vector<MPoly> reduced_pk(degree + 1, MPoly(n));
  for (unsigned k = 2; k <= degree; ++k)
    reduced_pk[k] = power_sum_product({k}, n).substitute(images);

  std::vector<Partition> basis;
  std::vector<MPoly> basis_images;
  for (unsigned w = 0; w <= degree; ++w) {
    for (auto& lambda : partitions_min_part_two(w)) {
      MPoly img = MPoly::constant(n, Rat(1));
      for (unsigned k : lambda) img *= reduced_pk[k];
      basis.push_back(std::move(lambda));
      basis_images.push_back(std::move(img));
    }
  }

  std::map<Exponents, std::size_t, GrlexGreater> row_of;
  auto index_monomials = [&](const MPoly& q) {
    for (const auto& [e, c] : q.terms()) row_of.try_emplace(e, row_of.size());
  };
  index_monomials(target);
  for (const auto& img : basis_images) index_monomials(img);

  std::vector<std::vector<Rat>> rows(row_of.size(), std::vector<Rat>(basis.size(), Rat(0)));
  std::vector<Rat> rhs(row_of.size(), Rat(0));
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [e, c] : basis_images[col].terms()) rows[row_of.at(e)][col] = c;
  for (const auto& [e, c] : target.terms()) rhs[row_of.at(e)] = c;

  const auto solution = detail::solve_exact(std::move(rows), std::move(rhs), basis.size());
  if (!solution)
    throw NotSymmetric("polynomial is not symmetric modulo a1 + ... + a" + std::to_string(n));
  for (std::size_t col = 0; col < basis.size(); ++col) result.add(basis[col], (*solution)[col]);
  return result;
}

void ClosedForm::set(Partition lambda, UPoly c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  if (c.empty()) {
    coeffs_.erase(lambda);
    return;
  }
  coeffs_[std::move(lambda)] = std::move(c);
}

PowerSumPoly ClosedForm::at(const Rat& n) const {
  PowerSumPoly out;
  for (const auto& [lambda, c] : coeffs_) out.add(lambda, eval(c, n));
  return out;
}

namespace {

// Lagrange basis polynomial through xs with value 1 at xs[i], 0 elsewhere.
UPoly lagrange_basis(const std::vector<Rat>& xs, std::size_t i) {
  UPoly basis{Rat(1)};
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j == i) continue;
    const Rat scale = Rat(1) / (xs[i] - xs[j]);
    UPoly next(basis.size() + 1, Rat(0));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k] * scale;
      next[k] -= basis[k] * xs[j] * scale;
    }
    basis = std::move(next);
  }
  return basis;
}

}  // namespace

ClosedForm interpolate_in_n(const std::vector<RankSample>& samples, unsigned degree_bound) {
  std::vector<const RankSample*> nodes;
  std::set<unsigned> seen;
  for (const auto& s : samples)
    if (seen.insert(s.n).second && nodes.size() < degree_bound + 1u) nodes.push_back(&s);
  if (seen.size() < degree_bound + 1u)
    throw InputError("interpolation of degree " + std::to_string(degree_bound) + " needs " +
                     std::to_string(degree_bound + 1) + " distinct ranks, got " +
                     std::to_string(seen.size()));

  std::set<Partition, PartitionOrder> support;
  for (const auto& s : samples)
    for (const auto& [lambda, c] : s.value.coeffs()) support.insert(lambda);

  std::vector<Rat> xs;
  for (const auto* node : nodes) xs.emplace_back(node->n);
  std::vector<UPoly> bases;
  for (std::size_t i = 0; i < xs.size(); ++i) bases.push_back(lagrange_basis(xs, i));

  ClosedForm result;
  for (const auto& lambda : support) {
    UPoly coeff(degree_bound + 1, Rat(0));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Rat y = nodes[i]->value.coefficient(lambda);
      if (is_zero(y)) continue;
      for (std::size_t k = 0; k < bases[i].size(); ++k) coeff[k] += y * bases[i][k];
    }
    result.set(lambda, std::move(coeff));
  }

  for (const auto& s : samples) {
    if (!(result.at(Rat(s.n)) == s.value))
      throw InterpolationInconsistent("sample at n = " + std::to_string(s.n) +
                                      " does not fit a polynomial of degree " +
                                      std::to_string(degree_bound));
  }
  return result;
}

}  // namespace casimir
