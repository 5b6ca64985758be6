#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "injwords/cyclotomic.hpp"
#include "injwords/partition.hpp"

namespace injwords {

/// A class function on S_n with values in ℚ(ζ_L), L = lcm(1..n), one value
/// per cycle type in the order of partitions(n).
class ClassFunction {
 public:
  explicit ClassFunction(int n);
  static ClassFunction from_integers(int n, const std::vector<std::int64_t>& values);

  int degree() const { return n_; }
  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<CyclotomicValue>& values() const { return values_; }
  const CyclotomicValue& value(const Partition& cycle_type) const;
  void set(const Partition& cycle_type, CyclotomicValue v);
  /// Value at the identity class (1^n).
  const CyclotomicValue& degree_value() const { return values_.back(); }

  bool is_rational() const;
  bool is_integral() const;
  /// Integer values; throws std::domain_error unless is_integral().
  std::vector<std::int64_t> integer_values() const;
  /// Pointwise product with the sign character.
  ClassFunction sign_twisted() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& scalar);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.n_ == b.n_ && a.values_ == b.values_; }

 private:
  std::size_t index_of(const Partition& cycle_type) const;

  int n_;
  std::uint64_t conductor_;
  std::vector<Partition> classes_;
  std::vector<CyclotomicValue> values_;
};

ClassFunction operator+(ClassFunction a, const ClassFunction& b);
ClassFunction operator-(ClassFunction a, const ClassFunction& b);

/// (1/n!) Σ_μ |class μ| a(μ) b(μ); b must be rational-valued (as characters
/// of S_n are), so no complex conjugation is needed.
CyclotomicValue inner_product(const ClassFunction& a, const ClassFunction& b);

/// χ^λ as a class function.
ClassFunction irreducible(const Partition& lambda);

/// Σ coefficient · a_1^{j_1} a_2^{j_2} ..., keyed by cycle type.
class CycleIndexPolynomial {
 public:
  const std::map<Partition, Rational>& terms() const { return terms_; }
  void add_term(const Partition& cycle_type, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  /// "1/2 a1^2 + 1/2 a2", terms in decreasing cycle-type order; "0" if empty.
  std::string to_string() const;
  friend bool operator==(const CycleIndexPolynomial&, const CycleIndexPolynomial&) = default;

 private:
  std::map<Partition, Rational> terms_;
};

/// Z(ψ) = (1/n!) Σ_σ ψ(σ) Z(σ); ψ must be rational-valued.
CycleIndexPolynomial cycle_index(const ClassFunction& psi);
/// Inverse of cycle_index.
ClassFunction from_cycle_index(int n, const CycleIndexPolynomial& z);

}  // namespace injwords
