#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "injwords/permutation.hpp"
#include "injwords/rational.hpp"

namespace injwords {

/// Element of the rational group algebra ℚS_r.
///
/// Stored sparsely, keyed by lexicographic rank of the permutation, so
/// iteration visits terms in lexicographic order of one-line words. Zero
/// coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree = 0);

  static GroupAlgebraElement identity(int degree);
  static GroupAlgebraElement basis(const Permutation& p, const Rational& coefficient = 1);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Rational coefficient(const Permutation& p) const;
  void add_term(const Permutation& p, const Rational& coefficient);

  /// Terms in lexicographic order of permutation words.
  std::vector<std::pair<Permutation, Rational>> terms() const;
  /// Raw access by lexicographic rank.
  const std::map<std::uint64_t, Rational>& ranked_terms() const { return terms_; }
  void add_ranked_term(std::uint64_t rank, const Rational& coefficient);

  Rational coefficient_sum() const;
  /// σ ↦ sgn(σ) σ.
  GroupAlgebraElement sign_twist() const;
  /// σ ↦ σ⁻¹.
  GroupAlgebraElement antipode() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  void require_same_degree(const GroupAlgebraElement& other) const;

  int degree_;
  std::map<std::uint64_t, Rational> terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a);

/// Convolution product; bilinear extension of composition.
/// Throws std::invalid_argument on degree mismatch.
GroupAlgebraElement product(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
inline GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  return product(x, y);
}

struct SerializedTerm {
  std::string word;
  std::string numerator;
  std::string denominator;
};

/// (one-line word, numerator, denominator) in lexicographic word order.
std::vector<SerializedTerm> serialize(const GroupAlgebraElement& x);

}  // namespace injwords
