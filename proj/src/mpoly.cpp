#include "casimir/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), 0u);
  const auto db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw InputError("variable index " + std::to_string(index + 1) + " exceeds " +
                     std::to_string(nvars) + " variables");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

std::optional<Rat> MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

Rat MPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_)
    throw InputError("exponent vector of length " + std::to_string(e.size()) +
                     " in a ring with " + std::to_string(nvars_) + " variables");
  if (casimir::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (casimir::is_zero(it->second)) terms_.erase(it);
  }
}

void MPoly::check_same_ring(const MPoly& other) const {
  if (nvars_ != other.nvars_)
    throw InputError("polynomial rings differ: " + std::to_string(nvars_) + " vs " +
                     std::to_string(other.nvars_) + " variables");
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_ring(b);
  MPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (casimir::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly operator-(MPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

Rat MPoly::eval(std::span<const Rat> point) const {
  if (point.size() != nvars_)
    throw InputError("evaluation point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() != nvars_)
    throw InputError("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  // Powers are cached per variable; exponents stay small in this code base.
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power_of = [&](std::size_t i, unsigned k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target, Rat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly result(target);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    result += term;
  }
  return result;
}

MPoly MPoly::rename(std::span<const std::size_t> map, std::size_t nvars) const {
  if (map.size() != nvars_) throw InputError("rename map must cover every variable");
  MPoly result(nvars);
  for (const auto& [e, c] : terms_) {
    Exponents target(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] >= nvars) throw InputError("rename target out of range");
      target[map[i]] += e[i];
    }
    result.add_term(target, c);
  }
  return result;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.nvars(), Rat(1));
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

MPoly binomial(const MPoly& x, unsigned k) {
  MPoly result = MPoly::constant(x.nvars(), Rat(1));
  for (unsigned i = 0; i < k; ++i) {
    result *= x - MPoly::constant(x.nvars(), Rat(i));
    result *= Rat(1) / Rat(i + 1);
  }
  return result;
}

}  // namespace casimir
