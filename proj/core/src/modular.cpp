#include "injwords/modular.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace injwords::modp {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::uint32_t prime(std::size_t i) {
  static std::mutex mutex;
  static std::vector<std::uint32_t> primes;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = primes.empty() ? (1ull << 31) : primes.back();
  while (primes.size() <= i) {
    do {
      --candidate;
    } while (!is_prime(candidate));
    primes.push_back(static_cast<std::uint32_t>(candidate));
  }
  return primes[i];
}

Residue inverse(Residue a, Residue p) {
  // Fermat; p is prime.
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  Residue result = 1;
  Residue base = a % p;
  for (Residue e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

Residue reduce(const Integer& z, Residue p) {
  return static_cast<Residue>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

Residue reduce(const Rational& q, Residue p) {
  const Residue num = reduce(q.get_num(), p);
  const Residue den = reduce(q.get_den(), p);
  if (den == 0) throw std::domain_error("denominator divisible by the prime");
  return num * inverse(den, p) % p;
}

std::int64_t symmetric_lift(Residue x, Residue p) {
  x %= p;
  return x > p / 2 ? static_cast<std::int64_t>(x) - static_cast<std::int64_t>(p) : static_cast<std::int64_t>(x);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Residue p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

DenseMatrix DenseMatrix::identity(std::size_t n, Residue p) {
  DenseMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  for (Residue x : data_) {
    if (x) return false;
  }
  return true;
}

DenseMatrix reduce_dense(const RationalMatrix& m, Residue p) {
  DenseMatrix out(m.rows(), m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out.at(r, e.col) = reduce(e.value, p);
  }
  return out;
}

SparseMatrix reduce_sparse(const RationalMatrix& m, Residue p) {
  SparseMatrix out(m.rows(), m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto& row = out.row(r);
    for (const auto& e : m.row(r)) {
      const Residue v = reduce(e.value, p);
      if (v) row.push_back(SparseEntry{e.col, v});
    }
  }
  return out;
}

namespace {

// Row elimination shared by rank and echelon form. With `reduced`, pivot rows
// are also cleared above.
std::vector<std::size_t> eliminate(DenseMatrix& m, bool reduced) {
  const Reducer mod(m.modulus());
  const Residue p = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      Residue* a = m.row_data(pivot);
      Residue* b = m.row_data(rank);
      std::swap_ranges(a + c, a + cols, b + c);
    }
    Residue* prow = m.row_data(rank);
    const Residue inv = inverse(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = mod(prow[j] * inv);
    // Nonzero tail of the pivot row, so sparse rows stay cheap.
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (prow[j]) support.push_back(j);
    }
    for (std::size_t i = reduced ? 0 : rank + 1; i < rows; ++i) {
      if (i == rank) continue;
      Residue* row = m.row_data(i);
      const Residue f = row[c];
      if (!f) continue;
      const Residue g = p - f;
      row[c] = 0;
      for (std::size_t j : support) row[j] = mod(row[j] + g * prow[j]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t rank(DenseMatrix m) { return eliminate(m, false).size(); }

std::vector<std::size_t> reduce_row_echelon(DenseMatrix& m) { return eliminate(m, true); }

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

std::vector<Residue> characteristic_polynomial(DenseMatrix h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const Residue p = h.modulus();
  const Reducer mod(p);
  const std::size_t n = h.rows();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(i, j), h.at(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(j, i), h.at(j, m));
    }
    const Residue inv = inverse(h.at(m, m - 1), p);
    std::vector<Residue> u(n, 0);
    bool any = false;
    for (std::size_t r = m + 1; r < n; ++r) {
      u[r] = mod(h.at(r, m - 1) * inv);
      if (!u[r]) continue;
      any = true;
      const Residue neg = p - u[r];
      Residue* row = h.row_data(r);
      const Residue* pivot_row = h.row_data(m);
      for (std::size_t j = m - 1; j < n; ++j) row[j] = mod(row[j] + neg * pivot_row[j]);
    }
    if (!any) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Residue* row = h.row_data(j);
      Residue acc = row[m];
      for (std::size_t r = m + 1; r < n; ++r) {
        if (u[r]) acc = mod(acc + u[r] * row[r]);
      }
      row[m] = acc;
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<Residue>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = polys[k];
    cur.assign(k + 1, 0);
    const auto& prev = polys[k - 1];
    const Residue hkk = h.at(k - 1, k - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = (cur[d] + (p - hkk) * prev[d]) % p;
    }
    Residue t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = t * h.at(i, i - 1) % p;
      const Residue coeff = h.at(i - 1, k - 1) * t % p;
      if (coeff) {
        const auto& q = polys[i - 1];
        for (std::size_t d = 0; d < q.size(); ++d) cur[d] = (cur[d] + (p - coeff) * q[d]) % p;
      }
    }
  }
  return polys[n];
}

Residue evaluate(const std::vector<Residue>& poly, Residue x, Residue p) {
  Residue acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
  return acc;
}

DenseMatrix multiply(const SparseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("modular multiply: shape mismatch");
  const Residue p = a.modulus();
  const Reducer mod(p);
  DenseMatrix out(a.rows(), b.cols(), p);
  const std::size_t cols = b.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Residue* dst = out.row_data(r);
    for (const auto& e : a.row(r)) {
      const Residue* src = b.row_data(e.col);
      for (std::size_t j = 0; j < cols; ++j) dst[j] = mod(dst[j] + e.value * src[j]);
    }
  }
  return out;
}

DenseMatrix shifted(DenseMatrix a, Residue c) {
  const Residue p = a.modulus();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) a.at(i, i) = (a.at(i, i) + p - c % p) % p;
  return a;
}

}  // namespace injwords::modp
