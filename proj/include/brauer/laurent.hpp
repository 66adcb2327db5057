#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[delta, delta^-1], stored sparsely as exponent -> nonzero
/// coefficient. Zero is the empty map, so structural equality is ring
/// equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(BigInt c) { return monomial(0, std::move(c)); }
  static LaurentPoly monomial(int exponent, BigInt coeff);
  static LaurentPoly delta_power(int exponent) { return monomial(exponent, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, BigInt>& terms() const { return terms_; }

  /// Coefficient of delta^exponent (zero if absent).
  BigInt coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  /// Multiplication by delta^k; shifts every exponent.
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form such as "d^2 + 3 - 2d^-1" (highest degree first).
  std::string to_string() const;

  /// Pairs (exponent, coefficient) ascending by exponent.
  std::vector<std::pair<int, BigInt>> sorted_terms() const;

 private:
  void add_term(int exponent, const BigInt& coeff);

  std::map<int, BigInt> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace brauer
