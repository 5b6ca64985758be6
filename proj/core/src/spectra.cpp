#include "injwords/spectra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/modular.hpp"
#include "injwords/tableau.hpp"

namespace injwords {

std::int64_t eigenvalue_search_bound(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("eigenvalue bound of a non-square matrix");
  Rational best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum = 0;
    for (const auto& e : m.row(r)) sum += abs(e.value);
    best = std::max(best, sum);
  }
  Integer ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return ceiling.get_si();
}

namespace {

constexpr std::size_t kScreeningPrimes = 3;

Integer infinity_norm(const RationalMatrix& a) {
  Integer best = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer sum = 0;
    for (const auto& e : a.row(r)) sum += abs(e.value.get_num());
    best = std::max(best, sum);
  }
  return best;
}

// Whether Π_c (a - c·I) = 0 for the integer matrix a. Entries of the product
// are bounded by the product of the factors' infinity norms, so vanishing
// modulo primes whose product exceeds twice that bound is exact.
bool annihilated_by(const RationalMatrix& a, const std::vector<Integer>& roots) {
  Integer bound = 1;
  for (const auto& c : roots) bound *= infinity_norm(shifted(a, Rational(c)));
  bound *= 2;
  Integer covered = 1;
  for (std::size_t i = 0; covered <= bound; ++i) {
    const modp::Residue p = modp::prime(i);
    auto product = modp::DenseMatrix::identity(a.rows(), p);
    for (const auto& c : roots) {
      const auto factor = modp::reduce_sparse(shifted(a, Rational(c)), p);
      product = modp::multiply(factor, product);
    }
    if (!product.is_zero()) return false;
    covered *= static_cast<unsigned long>(p);
  }
  return true;
}

}  // namespace

SpectrumCertificate integer_spectrum_certificate(const RationalMatrix& m, bool /*diagonalizable_hint*/) {
  if (!m.is_square()) throw std::invalid_argument("spectrum of a non-square matrix");
  SpectrumCertificate cert;
  cert.dimension = m.rows();
  if (cert.dimension == 0) {
    cert.integral = true;
    cert.trace_matches = true;
    return cert;
  }
  const std::int64_t bound = eigenvalue_search_bound(m);
  const Integer d = m.denominator_lcm();
  const RationalMatrix a = Rational(d) * m;  // eigenvalue c of m is d·c of a

  // Upper bounds on nullity over ℚ: the rank modulo p never exceeds the rank
  // over ℚ, and a rational root of the characteristic polynomial stays a root
  // modulo p.
  std::map<std::int64_t, std::size_t> upper;
  for (std::int64_t c = -bound; c <= bound; ++c) upper[c] = cert.dimension;
  for (std::size_t attempt = 0; attempt < kScreeningPrimes; ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    const auto reduced = modp::reduce_dense(a, p);
    const auto poly = modp::characteristic_polynomial(reduced);
    for (auto& [c, u] : upper) {
      if (u == 0) continue;
      const modp::Residue x = modp::reduce(Integer(d * c), p);
      if (modp::evaluate(poly, x, p) != 0) {
        u = 0;
        continue;
      }
      u = std::min(u, cert.dimension - modp::rank(modp::shifted(reduced, x)));
    }
    std::size_t total = 0;
    for (const auto& [c, u] : upper) total += u;
    if (total <= cert.dimension) break;
  }

  std::size_t total = 0;
  std::vector<Integer> roots;
  for (const auto& [c, u] : upper) {
    if (u) {
      total += u;
      roots.push_back(d * c);
    }
  }
  std::map<std::int64_t, std::size_t> exact;
  if (total == cert.dimension && annihilated_by(a, roots)) {
    // The minimal polynomial has distinct integer roots among the
    // candidates, so geometric multiplicities fill the dimension; each is
    // bounded by its modular upper bound, which therefore is exact.
    for (const auto& [c, u] : upper) {
      if (u) exact[c] = u;
    }
  } else {
    for (const auto& [c, u] : upper) {
      if (!u) continue;
      const std::size_t nul = nullity(shifted(m, Rational(c)));
      if (nul) exact[c] = nul;
    }
  }

  std::size_t filled = 0;
  Rational trace_sum = 0;
  for (const auto& [c, mult] : exact) {
    cert.spectrum.push_back(SpectrumEntry{c, mult});
    filled += mult;
    trace_sum += Rational(c) * static_cast<unsigned long>(mult);
  }
  cert.residual_dimension = cert.dimension - filled;
  cert.integral = cert.residual_dimension == 0;
  cert.trace_matches = cert.integral && trace_sum == m.trace();
  return cert;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& alpha) {
  if (!lambda.contains(alpha)) return false;
  // One cell per column ⇔ the rows interlace: λ_{i+1} <= α_i.
  for (int i = 0; i + 1 < lambda.length(); ++i) {
    if (lambda.part(i + 1) > alpha.part(i)) return false;
  }
  return true;
}

std::vector<SpectrumEntry> predicted_omega_spectrum(int n, int r, int s) {
  if (r < 1 || r > n) throw std::invalid_argument("predicted spectrum needs 1 <= r <= n");
  const std::int64_t scalar = static_cast<std::int64_t>(r + 1) * (n - r);
  const auto strip_offset = static_cast<std::int64_t>(binomial(n - r, 2));
  std::map<std::int64_t, std::size_t> spectrum;
  for (const auto& alpha : partitions(r)) {
    const auto f_alpha = count_standard_tableaux(alpha);
    for (const auto& lambda : partitions(n)) {
      if (!is_horizontal_strip(lambda, alpha)) continue;
      std::int64_t content = 0;
      for (int i = 0; i < lambda.length(); ++i) {
        for (int j = alpha.part(i); j < lambda.part(i); ++j) content += j - i;
      }
      const std::int64_t omega = scalar + s * (content - strip_offset);
      spectrum[omega] += f_alpha * count_standard_tableaux(lambda);
    }
  }
  std::vector<SpectrumEntry> out;
  for (const auto& [value, mult] : spectrum) out.push_back(SpectrumEntry{value, mult});
  return out;
}

PositivityReport positivity_check(int n, int r, int s) {
  if (r < 0 || r >= n) throw std::invalid_argument("positivity check needs 0 <= r < n");
  PositivityReport report;
  report.n = n;
  report.r = r;
  const auto cert = integer_spectrum_certificate(laplacian(n, r), true);
  if (!cert.spectrum.empty()) report.min_eigenvalue = cert.spectrum.front().value;
  report.positive_definite = cert.integral && report.min_eigenvalue && *report.min_eigenvalue > 0;
  report.printed_bound = static_cast<std::int64_t>(r + 1) * (n - r) - r;
  if (r >= 1) {
    const auto predicted = predicted_omega_spectrum(n, r, s);
    report.min_predicted_omega = predicted.front().value;
  } else {
    report.min_predicted_omega = static_cast<std::int64_t>(n);  // Ω on M_0 is the scalar n
  }
  report.printed_bound_holds = report.min_predicted_omega >= report.printed_bound;
  return report;
}

}  // namespace injwords
