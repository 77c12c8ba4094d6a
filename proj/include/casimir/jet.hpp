#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/mpoly.hpp"
#include "casimir/rational.hpp"

namespace casimir {

/// Subset of {t_1, ..., t_m}; bit j-1 stands for t_j.
using Subset = std::uint32_t;

inline constexpr int kMaxJetVariables = 24;

inline Rat zero_like(const Rat&) { return Rat(0); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.nvars()); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.nvars(), Rat(1)); }
inline std::optional<Rat> as_rational(const Rat& r) { return r; }
inline std::optional<Rat> as_rational(const MPoly& p) { return p.constant_value(); }

/// Element of the multilinear truncated algebra Scalar[t_1..t_m]/(t_1^2, ..., t_m^2).
///
/// A jet is a map from subsets S of {1..m} to the coefficient of prod_{j in S} t_j.
/// Storage is dense over all 2^m subsets; absent terms are zero scalars.
/// `Scalar` is Rat or MPoly; the zero passed at construction fixes the
/// coefficient ring (for MPoly, its variable count).
template <class Scalar>
class Jet {
 public:
  Jet(int m, const Scalar& zero) : m_(m), zero_(zero_like(zero)) {
    if (m < 0 || m > kMaxJetVariables)
      throw InputError("jet variable count " + std::to_string(m) + " outside 0.." +
                       std::to_string(kMaxJetVariables));
    coeffs_.assign(std::size_t{1} << m, zero_);
  }

  static Jet constant(int m, const Scalar& c) {
    Jet j(m, c);
    j.coeffs_[0] = c;
    return j;
  }

  /// t_{index+1} scaled by `one`.
  static Jet variable(int m, int index, const Scalar& one) {
    if (index < 0 || index >= m) throw InputError("jet variable index out of range");
    Jet j(m, one);
    j.coeffs_[Subset{1} << index] = one;
    return j;
  }

  int m() const { return m_; }
  Subset full() const { return static_cast<Subset>((std::size_t{1} << m_) - 1); }
  const Scalar& zero() const { return zero_; }

  const Scalar& operator[](Subset s) const { return coeffs_.at(s); }
  void set(Subset s, Scalar value) { coeffs_.at(s) = std::move(value); }
  Scalar& coefficient(Subset s) { return coeffs_.at(s); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!casimir::is_zero(c)) return false;
    return true;
  }

  /// Subsets with a nonzero coefficient, ascending.
  std::vector<Subset> support() const {
    std::vector<Subset> out;
    for (std::size_t s = 0; s < coeffs_.size(); ++s)
      if (!casimir::is_zero(coeffs_[s])) out.push_back(static_cast<Subset>(s));
    return out;
  }

  Jet& operator+=(const Jet& other) {
    check_same(other);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += other.coeffs_[s];
    return *this;
  }
  Jet& operator-=(const Jet& other) {
    check_same(other);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] -= other.coeffs_[s];
    return *this;
  }
  Jet& operator*=(const Rat& c) {
    for (auto& v : coeffs_) v = Scalar(v * c);
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Rat& c) { return a *= c; }
  friend Jet operator-(Jet a) { return a *= Rat(-1); }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
  }

  void check_same(const Jet& other) const {
    if (m_ != other.m_)
      throw InputError("jets over " + std::to_string(m_) + " and " + std::to_string(other.m_) +
                       " variables do not combine");
  }

 private:
  int m_;
  Scalar zero_;
  std::vector<Scalar> coeffs_;
};

/// Product in the truncated algebra: the coefficient of S is the sum of
/// a[S1] * b[S2] over disjoint splittings S1 + S2 = S.
template <class Scalar>
Jet<Scalar> jet_mul(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  a.check_same(b);
  Jet<Scalar> r(a.m(), a.zero());
  const Subset full = a.full();
  for (Subset s = 0;; ++s) {
    if (!is_zero(a[s])) {
      const Subset rest = full & ~s;
      for (Subset u = rest;; u = (u - 1) & rest) {
        if (!is_zero(b[u])) r.coefficient(s | u) += a[s] * b[u];
        if (u == 0) break;
      }
    }
    if (s == full) break;
  }
  return r;
}

template <class Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return jet_mul(a, b);
}

/// Inverse via the terminating geometric series c^-1 sum_k (-nu)^k, where
/// a = c (1 + nu). Throws NotInvertible unless the constant term is a nonzero rational.
template <class Scalar>
Jet<Scalar> jet_inv(const Jet<Scalar>& a) {
  const auto c = as_rational(a[0]);
  if (!c || is_zero(*c)) throw NotInvertible("jet constant term is not an invertible rational");
  const Rat inv_c = Rat(1) / *c;
  Jet<Scalar> neg_nu = a * (-inv_c);
  neg_nu.coefficient(0) = zero_like(a.zero());
  const Jet<Scalar> one = Jet<Scalar>::constant(a.m(), one_like(a.zero()));
  Jet<Scalar> result = one;
  Jet<Scalar> power = one;
  for (int k = 1; k <= a.m(); ++k) {
    power = jet_mul(power, neg_nu);
    if (power.is_zero()) break;
    result += power;
  }
  return result * inv_c;
}

/// Embeds a rational jet into the ring of polynomials in `nvars` variables.
inline Jet<MPoly> lift(const Jet<Rat>& a, std::size_t nvars) {
  Jet<MPoly> out(a.m(), MPoly(nvars));
  for (Subset s : a.support()) out.set(s, MPoly::constant(nvars, a[s]));
  return out;
}

/// (1 + nu)^beta = sum_k binom(beta, k) nu^k with a symbolic exponent. The
/// series stops once nu^k vanishes, which happens by k = m + 1.
inline Jet<MPoly> jet_pow(const Jet<Rat>& a, const MPoly& beta) {
  if (a[0] != 1) throw InputError("jet_pow needs a jet with constant term 1");
  Jet<Rat> nu = a;
  nu.set(0, Rat(0));
  Jet<MPoly> result(a.m(), MPoly(beta.nvars()));
  Jet<Rat> power = Jet<Rat>::constant(a.m(), Rat(1));
  for (int k = 0; k <= a.m(); ++k) {
    if (k > 0) power = jet_mul(power, nu);
    if (power.is_zero()) break;
    const MPoly coeff = binomial(beta, static_cast<unsigned>(k));
    for (Subset s : power.support()) result.coefficient(s) += coeff * power[s];
  }
  return result;
}

}  // namespace casimir
