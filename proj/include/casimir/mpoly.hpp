#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "casimir/rational.hpp"

namespace casimir {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest first: total degree descending, then
/// lexicographic descending on the exponent vector.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in variables a1..aN (index 0..N-1).
///
/// Terms are held in canonical grlex-descending order and zero coefficients
/// are never stored. Two polynomials only combine when their variable counts
/// agree; otherwise InputError is thrown.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// Value if the polynomial is constant (including zero).
  std::optional<Rat> constant_value() const;

  Rat coefficient(const Exponents& e) const;

  /// Adds c * x^e in place.
  void add_term(const Exponents& e, const Rat& c);

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a);

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Exact evaluation; |point| must equal nvars.
  Rat eval(std::span<const Rat> point) const;

  /// Replaces variable i by images[i]; all images share one variable count,
  /// which becomes the variable count of the result.
  MPoly substitute(std::span<const MPoly> images) const;

  /// Renames variable i to variable map[i] in a ring with `nvars` variables.
  MPoly rename(std::span<const std::size_t> map, std::size_t nvars) const;

 private:
  void check_same_ring(const MPoly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// (x)_k / k! = x (x-1) ... (x-k+1) / k!
MPoly binomial(const MPoly& x, unsigned k);

}  // namespace casimir
