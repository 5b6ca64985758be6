#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "injwords/group_algebra.hpp"
#include "injwords/rational.hpp"

namespace injwords {

/// A word of distinct letters from {1..n}.
class InjectiveWord {
 public:
  InjectiveWord() = default;
  /// Throws std::invalid_argument on repeated or out-of-range letters.
  InjectiveWord(int n, std::vector<int> letters);

  int ambient() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::span<const int> letters() const { return letters_; }
  int letter(int position) const { return letters_[static_cast<std::size_t>(position - 1)]; }
  bool contains(int letter) const;
  /// 1-based position of the letter, 0 if absent.
  int position_of(int letter) const;
  /// The word with the letter at `position` (1-based) deleted.
  InjectiveWord without_position(int position) const;
  /// Letters concatenated for n <= 9 ("231"), space separated otherwise;
  /// the empty word prints as "()".
  std::string to_string() const;

  auto operator<=>(const InjectiveWord&) const = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

/// Formal rational combination of injective words of one length.
class Chain {
 public:
  Chain(int n, int degree) : n_(n), degree_(degree) {}

  int ambient() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const InjectiveWord& w) const;
  void add_term(const InjectiveWord& w, const Rational& c);
  /// Terms in lexicographic order of words.
  const std::map<InjectiveWord, Rational>& terms() const { return terms_; }

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Rational& scalar);
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  void require_compatible(const Chain& other) const;

  int n_;
  int degree_;
  std::map<InjectiveWord, Rational> terms_;
};

Chain operator+(Chain a, const Chain& b);
Chain operator-(Chain a, const Chain& b);
Chain operator*(const Rational& s, Chain a);

/// All injective words of length r over {1..n}, lexicographically ordered.
/// Throws std::invalid_argument unless 0 <= r <= n.
std::vector<InjectiveWord> basis(int n, int r);

/// Position of a word in basis(n, r) without building the basis.
std::size_t word_index(int n, std::span<const int> letters);

/// Σ_j (-1)^{j-1} (word with position j deleted). Throws on the empty word.
Chain boundary(const InjectiveWord& w);
Chain boundary(const Chain& c);

/// The part of the boundary that deletes `letter`, with the same signs.
Chain boundary_restricted(int letter, const Chain& c);

/// Σ_π x_π · (alphabet[π(1)], ..., alphabet[π(r)]) as a chain over {1..n}:
/// the group algebra element written on the given letters in positions.
Chain word_chain(const GroupAlgebraElement& x, int n, std::span<const int> alphabet);

}  // namespace injwords
