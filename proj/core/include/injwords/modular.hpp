#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "injwords/matrix.hpp"
#include "injwords/rational.hpp"

// Dense and sparse matrices over prime fields F_p with p < 2^31, used to
// bound or certify exact rational computations.
namespace injwords::modp {

using Residue = std::uint64_t;

/// The i-th prime below 2^31, counting down from 2^31 - 1.
std::uint32_t prime(std::size_t i);

Residue inverse(Residue a, Residue p);

/// Barrett reduction for a fixed modulus below 2^32.
class Reducer {
 public:
  explicit Reducer(Residue p) : p_(p), m_(static_cast<Residue>(~0ull / p)) {}
  Residue modulus() const { return p_; }
  Residue operator()(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    Residue r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }

 private:
  Residue p_;
  Residue m_;
};
Residue reduce(const Integer& z, Residue p);
/// Throws std::domain_error when p divides the denominator.
Residue reduce(const Rational& q, Residue p);

class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, Residue p);
  static DenseMatrix identity(std::size_t n, Residue p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue modulus() const { return p_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue* row_data(std::size_t r) { return data_.data() + r * cols_; }
  const Residue* row_data(std::size_t r) const { return data_.data() + r * cols_; }
  bool is_zero() const;
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Residue p_;
  std::vector<Residue> data_;
};

struct SparseEntry {
  std::uint32_t col;
  Residue value;
};

class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols, Residue p) : cols_(cols), p_(p), rows_(rows) {}
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Residue modulus() const { return p_; }
  std::vector<SparseEntry>& row(std::size_t r) { return rows_[r]; }
  const std::vector<SparseEntry>& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t cols_;
  Residue p_;
  std::vector<std::vector<SparseEntry>> rows_;
};

DenseMatrix reduce_dense(const RationalMatrix& m, Residue p);
SparseMatrix reduce_sparse(const RationalMatrix& m, Residue p);

/// Rank over F_p (the argument is consumed).
std::size_t rank(DenseMatrix m);

/// Brings m to reduced row echelon form in place and returns the pivot
/// columns; rows past the rank are zero.
std::vector<std::size_t> reduce_row_echelon(DenseMatrix& m);

/// The rational n/d with |n|, d <= sqrt(m/2) and n ≡ d·a (mod m), if any.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

/// det(xI - m) over F_p via Hessenberg reduction, coefficients from x^0 up.
std::vector<Residue> characteristic_polynomial(DenseMatrix m);
Residue evaluate(const std::vector<Residue>& poly, Residue x, Residue p);

/// a·b.
DenseMatrix multiply(const SparseMatrix& a, const DenseMatrix& b);

/// a - c·I, in place on a copy.
DenseMatrix shifted(DenseMatrix a, Residue c);

/// Representative in (-p/2, p/2].
std::int64_t symmetric_lift(Residue x, Residue p);

}  // namespace injwords::modp
