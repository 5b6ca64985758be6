#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "injwords/partition.hpp"

namespace injwords {

/// Permutation of {1..r} in one-line notation: position p holds the image of p.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a bijection on {1..size}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int degree);
  /// Product of the given cycles, each written (a b c ...) meaning a->b->c->...->a.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  /// Parses "213" (single digits, degree <= 9) or "2 1 3".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(word_.size()); }
  int operator()(int x) const { return word_[static_cast<std::size_t>(x - 1)]; }
  std::span<const int> word() const { return word_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Positions i in 1..r-1 with word[i] > word[i+1].
  std::vector<int> descents() const;
  int descent_count() const;
  int fixed_point_count() const;
  /// Cycles in increasing order of their smallest element, each starting there.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;

  /// Concatenated digits for degree <= 9, space separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// (p ∘ q)(x) = p(q(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationStatistics {
  int sign = 1;
  std::vector<int> descents;
  Partition cycle_type;
};

PermutationStatistics statistics(const Permutation& p);

/// Rank of the permutation among all permutations of its degree, ordered
/// lexicographically by one-line word (identity = 0).
std::uint64_t lex_rank(std::span<const int> word);
Permutation lex_unrank(int degree, std::uint64_t rank);

/// All permutations of {1..r} in lexicographic order.
std::vector<Permutation> all_permutations(int degree);

/// An arrangement of {1..n} \ {missing}.
///
/// Identified with S_{n-1} by lowering every letter above `missing` by one.
class GappedPermutation {
 public:
  GappedPermutation(int n, int missing, std::vector<int> word);

  int n() const { return n_; }
  int missing() const { return missing_; }
  std::span<const int> word() const { return word_; }

  Permutation relabeled() const;
  int sign() const { return relabeled().sign(); }
  int descent_count() const;

 private:
  int n_;
  int missing_;
  std::vector<int> word_;
};

/// Inserts the missing letter so that it lands at position d (1..n).
Permutation insert_letter(const GappedPermutation& sigma, int d);

}  // namespace injwords
