#pragma once

#include <optional>
#include <vector>

#include "injwords/group_algebra.hpp"
#include "injwords/matrix.hpp"

namespace injwords {

/// υ_r = r·id + Σ_{u≠v} (cycle moving the card at position u to position v).
/// For u < v the cycle is (v, u, u+1, ..., v-1); for u > v it is
/// (v, u, u-1, ..., v+1). r² times the random-to-random transition matrix.
GroupAlgebraElement random_to_random(int r);
/// Υ_r: υ_r with each cycle weighted by (-1)^{|v-u|}, i.e. its sign twist.
GroupAlgebraElement signed_random_to_random(int r);
/// T(u, v) = Σ_{u <= a < b <= v} (a, b) in ℚS_degree.
GroupAlgebraElement transposition_sum(int u, int v, int degree);
/// T(1,n) - T(1,r) - T(r+1,n): the transpositions crossing the cut after r.
GroupAlgebraElement cut_transposition_sum(int n, int r);

/// Σ_{a ∈ A, b ∉ A} (a, b) acting on letters, A the letter set of the word;
/// a matrix on M_r.
RationalMatrix value_transposition_matrix(int n, int r);

/// scalar·I + (position action of `position_part`) + value_sign·(cut value
/// transpositions), all on M_r over {1..n}.
struct OperatorDescription {
  int n = 0;
  int r = 0;
  Rational scalar;
  GroupAlgebraElement position_part;
  int value_sign = 0;

  RationalMatrix matrix() const;
};

/// (r+1)(n-r)·I + Υ_r + s·Γ.
OperatorDescription laplacian_description(int n, int r, int s);
/// Ω = (r+1)(n-r)·I + s·Γ.
OperatorDescription omega_description(int n, int r, int s);

RationalMatrix laplacian_by_formula(int n, int r, int s);
RationalMatrix omega_matrix(int n, int r, int s);

/// M_r → M_n, w ↦ (1/(n-r)!) Σ_u w·u over all arrangements u of the unused
/// letters appended to w.
RationalMatrix symmetrizing_embedding(int n, int r);

struct SignProbe {
  int n = 0;
  int r = 0;
  bool plus_matches = false;
  bool minus_matches = false;
};

/// Which cross-term signs make laplacian_by_formula equal laplacian for every
/// 1 <= r <= n <= n_max; `sign` is the one that works throughout, if any
/// (-1 preferred when both do, which only happens when every probe has r = n).
struct SignResolution {
  std::vector<SignProbe> probes;
  std::optional<int> sign;
};
SignResolution resolve_cross_term_sign(int n_max);

}  // namespace injwords
