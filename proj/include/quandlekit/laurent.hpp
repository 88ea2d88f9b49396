#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandlekit/integer_matrix.hpp"

namespace quandlekit {

/// Integer Laurent polynomial in t, stored sparsely as exponent -> nonzero
/// coefficient. The zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Coeffs = std::map<int, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeffs coeffs);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, int exponent);
  /// 1 - t
  static LaurentPoly one_minus_t();

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// The value if the polynomial has no non-constant terms.
  std::optional<BigInt> as_constant() const;
  BigInt coefficient(int exponent) const;

  // Both require !is_zero().
  int min_exponent() const { return coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.rbegin()->first; }

  /// Multiplication by t^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes t -> t^{-1}.
  LaurentPoly inverted() const;
  /// Shift so that the lowest exponent is 0 (zero stays zero).
  LaurentPoly normalized() const;
  /// Coefficients reduced into [0, n).
  LaurentPoly reduced_mod(const BigInt& n) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical text form accepted back by parse_polynomial, e.g.
  /// "t^2+t+1", "2*t^-1-3", "0". Terms are listed by descending exponent.
  std::string to_string() const;

 private:
  void insert(int exponent, const BigInt& c);
  Coeffs coeffs_;
};

/// Sum of coefficients, i.e. the value at t = 1.
BigInt eval_one(const LaurentPoly& f);

/// f = (1 - t) * ftilde + value, with value = f(1).
struct OneMinusTSplit {
  LaurentPoly ftilde;
  BigInt value;
};

OneMinusTSplit split_one_minus_t(const LaurentPoly& f);

/// Nonnegative gcd of the entries; the gcd of an all-zero (or empty)
/// vector is 0.
BigInt gcd_vec(std::span<const BigInt> c);

/// Lattice basis of {s in Z^k : sum s_i c_i = 0}, in Hermite normal form.
struct SyzygyBasis {
  IntMatrix vectors;
};

SyzygyBasis syzygy_basis(std::span<const BigInt> c);

}  // namespace quandlekit
