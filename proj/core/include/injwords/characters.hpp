#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "injwords/class_function.hpp"
#include "injwords/cyclotomic.hpp"
#include "injwords/permutation.hpp"
#include "injwords/tableau.hpp"

namespace injwords {

/// Ψ_σ(τ) = ζ_L^e for τ in the centralizer of σ, L = lcm(1..n): with the
/// smallest element of each cycle of σ as base point, τ sends the base of a
/// cycle c of length l to σ^t applied to the base of another cycle, and
/// contributes ζ_l^t. Throws std::invalid_argument if τ does not commute
/// with σ.
std::uint64_t psi_exponent(const Permutation& sigma, const Permutation& tau);
CyclotomicValue psi_value(const Permutation& sigma, const Permutation& tau);

/// χ_σ = Ind_{Z_σ}^{S_n} Ψ_σ, by summing over all of S_n.
ClassFunction induced_chi(const Permutation& sigma);
/// (1/|Z_σ|) Σ_{τ ∈ Z_σ} Ψ_σ(τ) χ^λ(τ): the multiplicity of χ^λ in χ_σ
/// computed on the centralizer side.
CyclotomicValue restricted_multiplicity(const Permutation& sigma, const Partition& lambda);

/// Character of M_r^(k) (k = nullopt: all of M_r) under S_n renaming
/// letters, from the trace of (letter renaming)∘(position projector).
/// r = 0 gives the trivial character.
ClassFunction module_character(int n, int r, std::optional<int> k);
/// The same traces, read off explicit matrices.
ClassFunction module_character_by_matrices(int n, int r, std::optional<int> k);
/// Ind_{S_r × S_{n-r}}^{S_n}(Reg_r ⊗ θ) with θ trivial, or the sign of
/// S_{n-r} when `sign_on_complement`.
ClassFunction induced_word_character(int n, int r, bool sign_on_complement);

/// Character of H_n^(k)(M) as Σ_r (-1)^{n-r} χ(M_r^(k-(n-r))).
ClassFunction hodge_character(int n, int k);
/// Character of ker Λ_n ∩ M_n^(k), from traces modulo a prime lifted to
/// integers.
ClassFunction hodge_character_by_kernel(int n, int k);
/// hodge_character_by_kernel for k = 1..n (index k-1), sharing the work.
std::vector<ClassFunction> hodge_characters_by_kernel(int n);
/// Σ_r (-1)^{n-r} χ(M_r): the character of H_n(M).
ClassFunction top_homology_character(int n);

/// Character of the left ideal ℚS_n·e_n^(k) under left multiplication.
ClassFunction ideal_character(int n, int k);

struct CharacterComparison {
  ClassFunction lhs;
  ClassFunction rhs;
  bool equal = false;
  /// Both sides take rational integer values.
  bool integral = false;
  std::optional<Partition> first_mismatch;
};

/// sgn ⊗ χ(H_n^(k)) against Σ χ_σ over derangement classes with k cycles.
CharacterComparison verify_hodge_piece_theorem(int n, int k);
/// sgn ⊗ χ(ℚS_n e_n^(k)) against Σ χ_σ over classes with k cycles.
CharacterComparison verify_ideal_theorem(int n, int k);

struct TableauMultiplicity {
  Partition shape;
  std::int64_t multiplicity = 0;     // ⟨χ(H_n), χ^λ⟩
  std::uint64_t even_tableaux = 0;   // SYT of the shape with even smallest descent
  std::uint64_t tableaux = 0;        // f_λ
};
struct TableauCheck {
  std::vector<TableauMultiplicity> rows;
  bool holds = false;
  /// Σ_λ multiplicity · f_λ.
  std::int64_t dimension = 0;
};
TableauCheck verify_reiner_webb(int n, DescentConvention convention = DescentConvention::kTerminal);

}  // namespace injwords
