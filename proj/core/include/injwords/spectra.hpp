#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "injwords/matrix.hpp"
#include "injwords/partition.hpp"

namespace injwords {

struct SpectrumEntry {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Integer eigenvalues with their geometric multiplicities.
///
/// integral holds exactly when the multiplicities fill the dimension, which
/// makes the matrix diagonalizable over ℚ with this spectrum.
struct SpectrumCertificate {
  std::size_t dimension = 0;
  std::vector<SpectrumEntry> spectrum;  // increasing eigenvalue
  bool integral = false;
  std::size_t residual_dimension = 0;
  /// Σ value·multiplicity equals the exact trace (meaningful when integral).
  bool trace_matches = false;
};

/// ⌈max_i Σ_j |m_ij|⌉, a bound on every eigenvalue's absolute value.
std::int64_t eigenvalue_search_bound(const RationalMatrix& m);

/// Multiplicities are the exact rational nullities of m - c·I for integers c
/// in [-B, B]. Candidates are screened through the characteristic polynomial
/// modulo primes; when the modular nullities already fill the dimension they
/// are confirmed by checking exactly that Π_c (m - c·I) vanishes.
///
/// `diagonalizable_hint` is informational: geometric multiplicities that fill
/// the dimension prove diagonalizability on their own.
SpectrumCertificate integer_spectrum_certificate(const RationalMatrix& m, bool diagonalizable_hint = false);

/// Eigenvalues of Ω on M_r over {1..n} predicted from contents of horizontal
/// strips: ω(α, λ) = (r+1)(n-r) + s·(Σ_{x ∈ λ/α} c_x - C(n-r, 2)) with
/// multiplicity Σ f_α f_λ over strips λ/α, α ⊢ r, λ ⊢ n.
std::vector<SpectrumEntry> predicted_omega_spectrum(int n, int r, int s);

/// Whether α ⊆ λ and λ/α has at most one cell per column.
bool is_horizontal_strip(const Partition& lambda, const Partition& alpha);

struct PositivityReport {
  int n = 0;
  int r = 0;
  std::optional<std::int64_t> min_eigenvalue;  // from the Λ_r certificate
  bool positive_definite = false;
  std::int64_t printed_bound = 0;  // (r+1)(n-r) - r
  std::int64_t min_predicted_omega = 0;
  bool printed_bound_holds = false;
};
/// Requires 0 <= r < n.
PositivityReport positivity_check(int n, int r, int s);

}  // namespace injwords
