#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace injwords {

struct CheckOutcome {
  bool passed = false;
  /// Deterministic summary on success, witness data on failure.
  std::string detail;
  /// Set by checks that settle the cross-term sign of the Laplacian formula.
  std::optional<int> resolved_sign;
};

struct CheckSpec {
  std::string id;
  /// The claim being checked, in words; "plumbing" for internal consistency.
  std::string anchor;
  std::string params;
  std::function<CheckOutcome()> run;
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  std::string params;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::vector<CheckRecord> checks;
  std::optional<int> resolved_sign;

  bool passed() const;
  std::size_t failures() const;
};

// Check groups. Each bound is inclusive; the groups are what the named
// suites are assembled from.
std::vector<CheckSpec> idempotent_checks(int r_max);
std::vector<CheckSpec> ideal_dimension_checks(int r_max);
std::vector<CheckSpec> boundary_checks(int n_max);
std::vector<CheckSpec> intertwining_checks(int n_max);
std::vector<CheckSpec> insertion_lemma_checks(int n_max);
std::vector<CheckSpec> homology_checks(int n_max);
std::vector<CheckSpec> hodge_checks(int n_max);
/// Λ_n = Υ_n up to n_max; the cross-term sign is resolved over n <= sign_n_max.
std::vector<CheckSpec> shuffle_checks(int n_max, int sign_n_max);

struct SpectraBounds {
  int n_max = 0;                 // Λ_r (all r), Ω, Υ_r on M_r
  int regular_r_max = 0;         // υ_r and Υ_r in the regular representation
  std::vector<std::pair<int, int>> extra_laplacians;  // further (n, r)
};
std::vector<CheckSpec> spectra_checks(const SpectraBounds& bounds);
std::vector<CheckSpec> character_checks(int n_max, int ideal_n_max);

/// Names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();
/// The checks of a named suite with every bound set to n_max (capped where
/// the suite's objects stop being small); throws std::invalid_argument for an
/// unknown suite.
std::vector<CheckSpec> suite_checks(const std::string& suite, int n_max);

/// Runs checks on `jobs` threads; records keep the order of `checks`. An
/// exception inside a check is recorded as a failure with its message.
VerificationReport run_checks(const std::string& suite, int n_max, const std::vector<CheckSpec>& checks, std::size_t jobs);
VerificationReport run_suite(const std::string& suite, int n_max, std::size_t jobs);

}  // namespace injwords
