#pragma once

#include <cstdint>
#include <vector>

#include "injwords/group_algebra.hpp"
#include "injwords/matrix.hpp"
#include "injwords/modular.hpp"

// Matrices of the complex of injective words M_n → M_{n-1} → ... → M_0.
// Rows and columns follow basis(n, r) (lexicographic words); M_0 is spanned by
// the empty word.
namespace injwords {

/// ∂_r : M_r → M_{r-1}, 1 <= r <= n.
RationalMatrix boundary_matrix(int n, int r);
/// δ_r : M_r → M_{r+1}, the transpose of ∂_{r+1}; 0 <= r < n.
RationalMatrix coboundary_matrix(int n, int r);
/// ∂[letter] restricted to M_r: only deletions of `letter`.
RationalMatrix restricted_boundary_matrix(int n, int r, int letter);
/// Λ_r = δ_{r-1} ∂_r + ∂_{r+1} δ_r, absent terms dropped; 0 <= r <= n.
RationalMatrix laplacian(int n, int r);

/// Matrix of x ∈ ℚS_r acting on M_r by permuting positions. A permutation π
/// sends the word w to the word w∘π (the letter in position π(q) moves to
/// position q). This is a right action: the matrix of x·y is A(y)·A(x).
RationalMatrix position_action_matrix(const GroupAlgebraElement& x, int n);
modp::DenseMatrix position_action_matrix(const GroupAlgebraElement& x, int n, modp::Residue p);

/// Matrix of g ∈ S_n acting on M_r by renaming letters: w ↦ g∘w.
RationalMatrix value_action_matrix(const Permutation& g, int r);

/// The projector of M_r onto M_r^(k), the image of e_r^(k).
RationalMatrix hodge_projector(int n, int r, int k);
/// Columns spanning M_r^(k), chosen among the projector's columns.
RationalMatrix hodge_component_basis(int n, int r, int k);
/// dim M_r^(k) for k = 1..r (index k-1), exact. For r = 0 the single entry is
/// the dimension of M_0.
std::vector<std::size_t> hodge_component_dimensions(int n, int r);
std::size_t hodge_component_dimension(int n, int r, int k);

/// rank ∂_r for r = 0..n (rank ∂_0 = 0), exact.
std::vector<std::size_t> boundary_ranks(int n);
/// dim H_r(M) for r = 0..n.
std::vector<std::size_t> homology_dimensions(int n);

struct HodgeHomology {
  int n = 0;
  int k = 0;
  /// Σ_r (-1)^{n-r} dim M_r^(k-(n-r)) over the k-th subcomplex.
  std::int64_t euler_characteristic = 0;
  /// dim(ker Λ_n ∩ M_n^(k)).
  std::size_t laplacian_kernel = 0;
  bool agree() const { return euler_characteristic == static_cast<std::int64_t>(laplacian_kernel); }
};
HodgeHomology hodge_homology(int n, int k);
/// hodge_homology(n, k) for k = 1..n (index k-1), sharing the work.
std::vector<HodgeHomology> hodge_homology_table(int n);
/// dim H_n^(k)(M); throws std::runtime_error when the two computations differ.
std::size_t hodge_homology_dimension(int n, int k);

}  // namespace injwords
