#include "injwords/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "injwords/modular.hpp"

namespace injwords {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back(MatrixEntry{static_cast<std::uint32_t>(i), Rational(1)});
  return m;
}

RationalMatrix RationalMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  RationalMatrix m(rows, cols);
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix");
    auto& row = m.data_[t.row];
    if (!row.empty() && row.back().col == t.col) {
      row.back().value += t.value;
    } else {
      row.push_back(MatrixEntry{static_cast<std::uint32_t>(t.col), std::move(t.value)});
    }
  }
  for (auto& row : m.data_) {
    std::erase_if(row, [](const MatrixEntry& e) { return e.value == 0; });
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows ? dense[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (dense[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (dense[i][j] != 0) m.data_[i].push_back(MatrixEntry{static_cast<std::uint32_t>(j), dense[i][j]});
    }
  }
  return m;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Rational(0);
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("add_to outside matrix");
  if (value == 0) return;
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (it->value == 0) row.erase(it);
  } else {
    row.insert(it, MatrixEntry{static_cast<std::uint32_t>(c), value});
  }
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back(MatrixEntry{static_cast<std::uint32_t>(r), e.value});
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& row) { return row.empty(); });
}

bool RationalMatrix::is_integral() const {
  for (const auto& row : data_) {
    for (const auto& e : row) {
      if (e.value.get_den() != 1) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Integer RationalMatrix::denominator_lcm() const {
  Integer d = 1;
  for (const auto& row : data_) {
    for (const auto& e : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.value.get_den_mpz_t());
  }
  return d;
}

std::vector<Triplet> RationalMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out.push_back(Triplet{r, e.col, e.value});
  }
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.col] = e.value;
  }
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<std::int64_t> where(cols_, -1);
  for (std::size_t i = 0; i < columns.size(); ++i) where.at(columns[i]) = static_cast<std::int64_t>(i);
  RationalMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) {
      if (where[e.col] >= 0) out.data_[r].push_back(MatrixEntry{static_cast<std::uint32_t>(where[e.col]), e.value});
    }
    std::sort(out.data_[r].begin(), out.data_[r].end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  }
  return out;
}

void RationalMatrix::require_same_shape(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
}

namespace {

std::vector<MatrixEntry> merge_rows(const std::vector<MatrixEntry>& a, const std::vector<MatrixEntry>& b, int sign) {
  std::vector<MatrixEntry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back(MatrixEntry{b[j].col, sign > 0 ? b[j].value : Rational(-b[j].value)});
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(a[i].value + b[j].value) : Rational(a[i].value - b[j].value);
      if (v != 0) out.push_back(MatrixEntry{a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  require_same_shape(other);
  for (std::size_t r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], other.data_[r], 1);
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  require_same_shape(other);
  for (std::size_t r = 0; r < rows_; ++r) data_[r] = merge_rows(data_[r], other.data_[r], -1);
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& e : row) e.value *= scalar;
  }
  return *this;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  std::vector<Triplet> out;
  std::vector<Rational> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::uint32_t> cols;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cols.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
          acc[eb.col] = ea.value * eb.value;
        } else {
          acc[eb.col] += ea.value * eb.value;
        }
      }
    }
    for (std::uint32_t c : cols) {
      if (acc[c] != 0) out.push_back(Triplet{r, c, acc[c]});
      touched[c] = 0;
    }
  }
  return RationalMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) out[r] += e.value * v[e.col];
  }
  return out;
}

RationalMatrix shifted(const RationalMatrix& a, const Rational& c) {
  if (!a.is_square()) throw std::invalid_argument("shift of a non-square matrix");
  return a - c * RationalMatrix::identity(a.rows());
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

namespace {

// Rows scaled by their denominator lcm; same row space, integer entries.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer d = 1;
    for (const auto& e : m.row(r)) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.value.get_den_mpz_t());
    for (const auto& e : m.row(r)) out[r][e.col] = e.value.get_num() * (d / e.value.get_den());
  }
  return out;
}

RationalMatrix integer_scaled(const RationalMatrix& m) {
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer d = 1;
    for (const auto& e : m.row(r)) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.value.get_den_mpz_t());
    for (const auto& e : m.row(r)) t.push_back(Triplet{r, e.col, Rational(e.value * d)});
  }
  return RationalMatrix::from_triplets(m.rows(), m.cols(), std::move(t));
}

}  // namespace

std::size_t rank_bareiss(const RationalMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& pv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = pv * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

std::size_t rank_multimodular(const RationalMatrix& m) {
  const RationalMatrix a = integer_scaled(m);
  const std::size_t full = std::min(a.rows(), a.cols());
  if (full == 0) return 0;
  // log2 of a Hadamard bound valid for every square minor: the product of the
  // larger-than-one Euclidean norms, taken over rows or over columns.
  auto log2_norms = [](const RationalMatrix& x) {
    double bits = 0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Integer sq = 0;
      for (const auto& e : x.row(r)) sq += e.value.get_num() * e.value.get_num();
      if (sq > 1) {
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, sq.get_mpz_t());
        bits += 0.5 * (std::log2(mant) + static_cast<double>(exp));
      }
    }
    return bits;
  };
  const double bound_bits = std::min(log2_norms(a), log2_norms(a.transpose())) + 2.0;
  std::size_t best = 0;
  double covered = 0;
  for (std::size_t i = 0; covered <= bound_bits; ++i) {
    const modp::Residue p = modp::prime(i);
    best = std::max(best, modp::rank(modp::reduce_dense(a, p)));
    if (best == full) return best;
    covered += std::log2(static_cast<double>(p)) - 1e-9;
  }
  return best;
}

std::optional<std::size_t> rank_by_kernel_lift(const RationalMatrix& m, std::size_t max_primes) {
  const RationalMatrix a = integer_scaled(m);
  const std::size_t cols = a.cols();
  const std::size_t full = std::min(a.rows(), cols);
  if (full == 0) return 0;

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  // residues[i * free + f] accumulates the RREF entry in pivot row i, free column f.
  std::vector<Integer> residues;
  Integer modulus = 1;
  for (std::size_t attempt = 0; attempt < max_primes; ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    auto reduced = modp::reduce_dense(a, p);
    auto piv = modp::reduce_row_echelon(reduced);
    if (piv.size() == full) return full;
    if (!pivots.empty() && piv != pivots) {
      // An unlucky prime lowers the rank; a larger rank restarts the lift.
      if (piv.size() <= pivots.size()) continue;
      modulus = 1;
    }
    if (modulus == 1) {
      pivots = piv;
      free_cols.clear();
      std::size_t next = 0;
      for (std::size_t c = 0; c < cols; ++c) {
        if (next < pivots.size() && pivots[next] == c) {
          ++next;
        } else {
          free_cols.push_back(c);
        }
      }
      residues.assign(pivots.size() * free_cols.size(), Integer(0));
    }
    const std::size_t nf = free_cols.size();
    // CRT: x ≡ old (mod M), x ≡ v (mod p).
    const Integer pz(static_cast<unsigned long>(p));
    Integer minv;
    if (modulus != 1) {
      Integer mm = modulus % pz;
      mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
    }
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t f = 0; f < nf; ++f) {
        Integer& x = residues[i * nf + f];
        const modp::Residue v = reduced.at(i, free_cols[f]);
        if (modulus == 1) {
          x = static_cast<unsigned long>(v);
        } else {
          Integer diff = Integer(static_cast<unsigned long>(v)) - x % pz;
          diff = (diff * minv) % pz;
          if (diff < 0) diff += pz;
          x += modulus * diff;
        }
      }
    }
    modulus *= pz;

    // Try to lift every kernel vector and verify a·v = 0 exactly.
    bool lifted = true;
    std::vector<std::vector<Integer>> kernel(nf, std::vector<Integer>(cols));
    for (std::size_t f = 0; f < nf && lifted; ++f) {
      std::vector<Rational> v(cols);
      v[free_cols[f]] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        const auto q = modp::rational_reconstruct(residues[i * nf + f], modulus);
        if (!q) {
          lifted = false;
          break;
        }
        v[pivots[i]] = -*q;
      }
      if (!lifted) break;
      const Integer d = common_denominator(v);
      for (std::size_t c = 0; c < cols; ++c) kernel[f][c] = v[c].get_num() * (d / v[c].get_den());
    }
    if (!lifted) continue;
    bool verified = true;
    for (std::size_t f = 0; f < nf && verified; ++f) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer acc = 0;
        for (const auto& e : a.row(r)) acc += e.value.get_num() * kernel[f][e.col];
        if (acc != 0) {
          verified = false;
          break;
        }
      }
    }
    // The lifted vectors are independent (unit entries on free columns), so
    // nullity over ℚ is at least nf while rank over ℚ is at least the
    // modular rank: both bounds meet.
    if (verified) return pivots.size();
  }
  return std::nullopt;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() * m.cols() <= 96 * 96) return rank_bareiss(m);
  // Lift the smaller of the two null spaces.
  if (m.cols() <= m.rows()) {
    if (auto r = rank_by_kernel_lift(m)) return *r;
  } else if (auto r = rank_by_kernel_lift(m.transpose())) {
    return *r;
  }
  return rank_multimodular(m);
}

EchelonForm reduced_row_echelon(const RationalMatrix& m) {
  EchelonForm f;
  f.rows = m.to_dense();
  auto& a = f.rows;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] != 0) a[i][j] -= factor * a[r][j];
      }
    }
    f.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return f;
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  const auto f = reduced_row_echelon(m);
  return m.select_columns(f.pivots);
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const auto f = reduced_row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : f.pivots) is_pivot[c] = true;
  std::vector<Triplet> t;
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    t.push_back(Triplet{free, k, Rational(1)});
    for (std::size_t i = 0; i < f.pivots.size(); ++i) {
      if (f.rows[i][free] != 0) t.push_back(Triplet{f.pivots[i], k, Rational(-f.rows[i][free])});
    }
    ++k;
  }
  return RationalMatrix::from_triplets(cols, k, std::move(t));
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  auto h = m.to_dense();
  const std::size_t n = m.rows();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && h[i][k - 1] == 0) ++i;
    if (i == n) continue;
    if (i != k) {
      std::swap(h[i], h[k]);
      for (std::size_t j = 0; j < n; ++j) std::swap(h[j][i], h[j][k]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (h[r][k - 1] == 0) continue;
      const Rational u = h[r][k - 1] / h[k][k - 1];
      for (std::size_t j = 0; j < n; ++j) h[r][j] -= u * h[k][j];
      for (std::size_t j = 0; j < n; ++j) h[j][k] += u * h[j][r];
    }
  }
  std::vector<std::vector<Rational>> polys(n + 1);
  polys[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    auto& cur = polys[k];
    cur.assign(k + 1, Rational(0));
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] += prev[d];
      cur[d] -= h[k - 1][k - 1] * prev[d];
    }
    Rational t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t *= h[i][i - 1];
      const Rational coeff = h[i - 1][k - 1] * t;
      if (coeff != 0) {
        const auto& q = polys[i - 1];
        for (std::size_t d = 0; d < q.size(); ++d) cur[d] -= coeff * q[d];
      }
    }
  }
  return polys[n];
}

void write_triplets(std::ostream& out, const RationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      out << r << ' ' << e.col << ' ' << e.value.get_num().get_str() << '/' << e.value.get_den().get_str() << '\n';
    }
  }
}

}  // namespace injwords
