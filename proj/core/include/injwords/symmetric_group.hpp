#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "injwords/partition.hpp"
#include "injwords/permutation.hpp"

namespace injwords {

/// Element list and (lazily built) multiplication table of S_r.
///
/// Elements are indexed by lexicographic rank. Instances are shared and
/// immutable apart from the table, which is built once under std::call_once.
class SymmetricGroup {
 public:
  /// Cached instance; degree must be in [0, 9].
  static const SymmetricGroup& of(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }
  std::size_t index_of(const Permutation& p) const { return static_cast<std::size_t>(lex_rank(p.word())); }
  std::size_t inverse_index(std::size_t a) const { return inverses_[a]; }
  int sign(std::size_t a) const { return signs_[a]; }

  /// Index of element(a) ∘ element(b).
  std::size_t compose_index(std::size_t a, std::size_t b) const;

  /// Whether compose_index is served from a precomputed table.
  bool has_table() const { return order() <= kTableLimit; }

  explicit SymmetricGroup(int degree);

 private:
  static constexpr std::size_t kTableLimit = 5040;

  void build_table() const;

  int degree_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverses_;
  std::vector<int> signs_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
};

struct ConjugacyClass {
  Partition cycle_type;
  std::uint64_t size = 0;
  Permutation representative;
};

/// Canonical representative: cycles of decreasing length on consecutive
/// integers, (1 2 .. l1)(l1+1 .. l1+l2)...
Permutation class_representative(const Partition& cycle_type);

/// One entry per partition of n, in reverse-lexicographic order of cycle type.
std::vector<ConjugacyClass> conjugacy_classes(int n);

/// Classes of fixed-point-free permutations with exactly k cycles.
std::vector<ConjugacyClass> derangement_classes(int n, int k);

/// Classes of permutations with exactly k cycles (fixed points included).
std::vector<ConjugacyClass> classes_with_cycle_count(int n, int k);

/// All τ with τ σ τ⁻¹ = σ, by exhaustive search, in lexicographic order.
std::vector<Permutation> centralizer_elements(const Permutation& sigma);

bool commutes(const Permutation& a, const Permutation& b);

}  // namespace injwords
