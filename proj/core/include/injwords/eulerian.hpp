#pragma once

#include <vector>

#include "injwords/group_algebra.hpp"

namespace injwords {

/// l_r^(k): (-1)^{k-1} Σ sgn(σ) σ over σ ∈ S_r with exactly k-1 descents.
GroupAlgebraElement first_eulerian_summand(int r, int k);

/// λ_r^(k) = Σ_{i=0}^{k-1} (-1)^i C(r+i, i) l_r^(k-i).
GroupAlgebraElement lambda_element(int r, int k);

/// [e_r^(1), ..., e_r^(r)], the unique solution of
///   (-1)^{k-1} λ_r^(k) = Σ_j k^j e_r^(j),  k = 1..r,
/// found by inverting the Vandermonde matrix (k^j) exactly.
///
/// Results are cached per r; the returned reference stays valid for the life
/// of the process.
const std::vector<GroupAlgebraElement>& eulerian_idempotents(int r);

/// Convenience accessor for e_r^(k), 1 <= k <= r.
const GroupAlgebraElement& eulerian_idempotent(int r, int k);

}  // namespace injwords
