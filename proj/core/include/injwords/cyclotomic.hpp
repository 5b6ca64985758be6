#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "injwords/rational.hpp"

namespace injwords {

/// Φ_L with integer coefficients from x^0 upward, computed by dividing
/// x^L - 1 by Φ_d for every proper divisor d of L. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t order);

/// Element of ℚ(ζ_L) = ℚ[x]/Φ_L(x), kept as its remainder of degree < φ(L),
/// so equality is coefficientwise.
class CyclotomicValue {
 public:
  explicit CyclotomicValue(std::uint64_t conductor = 1);
  static CyclotomicValue from_rational(const Rational& q, std::uint64_t conductor);
  /// ζ_order^t; order must divide the conductor.
  static CyclotomicValue root_of_unity(std::int64_t t, std::uint64_t order, std::uint64_t conductor);
  /// Σ_e counts[e] ζ_L^e for e = 0..L-1.
  static CyclotomicValue from_exponent_counts(const std::vector<Integer>& counts, std::uint64_t conductor);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> rational_value() const;
  /// Rational values print as rationals; others as a polynomial in z = ζ_L,
  /// highest power first.
  std::string to_string() const;

  CyclotomicValue& operator+=(const CyclotomicValue& other);
  CyclotomicValue& operator-=(const CyclotomicValue& other);
  CyclotomicValue& operator*=(const CyclotomicValue& other);
  CyclotomicValue& operator*=(const Rational& scalar);
  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;

 private:
  void require_same_field(const CyclotomicValue& other) const;

  std::uint64_t conductor_;
  std::vector<Rational> coeffs_;
};

CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b);
CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b);
CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b);
CyclotomicValue operator*(const Rational& s, CyclotomicValue a);

}  // namespace injwords
