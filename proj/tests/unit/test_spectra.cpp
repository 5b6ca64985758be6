#include <doctest.h>

#include "injwords/complex.hpp"
#include "injwords/partition.hpp"
#include "injwords/regular.hpp"
#include "injwords/shuffle.hpp"
#include "injwords/spectra.hpp"

using namespace injwords;

namespace {

RationalMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return RationalMatrix::from_dense(q);
}

using Spectrum = std::vector<SpectrumEntry>;

}  // namespace

TEST_CASE("eigenvalue search bound") {
  CHECK(eigenvalue_search_bound(dense({{3, -1}, {-1, 3}})) == 4);
  CHECK(eigenvalue_search_bound(RationalMatrix(3, 3)) == 0);
  for (int r = 1; r <= 5; ++r) CHECK(eigenvalue_search_bound(left_multiplication_matrix(random_to_random(r))) == r * r);
}

TEST_CASE("certificates of small matrices") {
  const auto c = integer_spectrum_certificate(laplacian(2, 2), true);
  CHECK(c.integral);
  CHECK(c.trace_matches);
  CHECK(c.spectrum == Spectrum{{0, 1}, {4, 1}});
  CHECK(integer_spectrum_certificate(RationalMatrix::identity(5), true).spectrum == Spectrum{{1, 5}});
  CHECK(integer_spectrum_certificate(laplacian(3, 1), true).spectrum == Spectrum{{3, 1}, {6, 2}});

  // Eigenvalues ±√2: nothing integral to find.
  const auto irrational = integer_spectrum_certificate(dense({{0, 2}, {1, 0}}));
  CHECK_FALSE(irrational.integral);
  CHECK(irrational.residual_dimension == 2);
  // A Jordan block has one eigenvector for a double eigenvalue.
  const auto jordan = integer_spectrum_certificate(dense({{1, 1}, {0, 1}}));
  CHECK_FALSE(jordan.integral);
  CHECK(jordan.spectrum == Spectrum{{1, 1}});
  CHECK(jordan.residual_dimension == 1);
  // Half-integral eigenvalues are not integral.
  CHECK_FALSE(integer_spectrum_certificate(dense({{1, 0}, {0, 2}}) * RationalMatrix::identity(2) -
                                           dense({{0, 0}, {0, 0}}) + RationalMatrix::from_dense({{Rational(1, 2), 0}, {0, 0}}))
                  .integral);
}

TEST_CASE("larger certificates agree with the modular screen") {
  const auto c = integer_spectrum_certificate(laplacian(5, 5), true);
  CHECK(c.integral);
  CHECK(c.trace_matches);
  CHECK(c.spectrum.front() == SpectrumEntry{0, 44});
  std::size_t total = 0;
  for (const auto& e : c.spectrum) total += e.multiplicity;
  CHECK(total == 120);
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition{2, 1}, Partition{1, 1}));
  CHECK(is_horizontal_strip(Partition{2, 2}, Partition{2}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1, 1}));
  CHECK_FALSE(is_horizontal_strip(Partition{2}, Partition{3}));
}

TEST_CASE("predicted Omega spectra") {
  CHECK(predicted_omega_spectrum(3, 1, -1) == Spectrum{{2, 1}, {5, 2}});
  CHECK(predicted_omega_spectrum(2, 1, -1) == Spectrum{{1, 1}, {3, 1}});
  CHECK(predicted_omega_spectrum(4, 4, -1) == Spectrum{{0, 24}});
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto cert = integer_spectrum_certificate(omega_matrix(n, r, -1), true);
      CHECK(cert.integral);
      CHECK(cert.spectrum == predicted_omega_spectrum(n, r, -1));
    }
  }
}

TEST_CASE("positivity") {
  const auto a = positivity_check(2, 1, -1);
  CHECK(a.positive_definite);
  CHECK(a.min_eigenvalue == 2);
  const auto b = positivity_check(3, 1, -1);
  CHECK(b.min_eigenvalue == 3);
  CHECK(b.printed_bound == 3);
  CHECK(b.min_predicted_omega == 2);
  CHECK_FALSE(b.printed_bound_holds);
  CHECK_THROWS(positivity_check(3, 3, -1));
}
