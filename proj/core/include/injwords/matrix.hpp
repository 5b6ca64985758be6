#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "injwords/rational.hpp"

namespace injwords {

struct MatrixEntry {
  std::uint32_t col;
  Rational value;
};

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Sparse exact-rational matrix, stored as rows of column-sorted nonzeros.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Duplicate positions are summed.
  static RationalMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void add_to(std::size_t r, std::size_t c, const Rational& value);
  std::span<const MatrixEntry> row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;
  bool is_symmetric() const;
  Rational trace() const;
  /// lcm of all entry denominators.
  Integer denominator_lcm() const;

  /// Row-major order.
  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Rational>> to_dense() const;
  RationalMatrix select_columns(std::span<const std::size_t> columns) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  void require_same_shape(const RationalMatrix& other) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<MatrixEntry>> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, RationalMatrix a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v);

/// a - c·I.
RationalMatrix shifted(const RationalMatrix& a, const Rational& c);
/// a·b - b·a.
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

// Exact rank over ℚ. Small matrices use fraction-free (Bareiss) elimination.
// Large ones take the rank modulo a prime (a lower bound) and certify it by
// lifting the modular kernel to ℚ and checking it exactly; if the lift does
// not settle, ranks modulo enough primes to beat a Hadamard bound on every
// minor decide.
std::size_t rank(const RationalMatrix& m);
std::size_t rank_bareiss(const RationalMatrix& m);
std::size_t rank_multimodular(const RationalMatrix& m);
/// Rank certified by an exact rational kernel; nullopt if the lift fails
/// within `max_primes` primes.
std::optional<std::size_t> rank_by_kernel_lift(const RationalMatrix& m, std::size_t max_primes = 40);
inline std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

/// Reduced row echelon form over ℚ together with its pivot columns.
struct EchelonForm {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
};
EchelonForm reduced_row_echelon(const RationalMatrix& m);

/// Columns of m forming a basis of its column space (the pivot columns).
RationalMatrix column_space_basis(const RationalMatrix& m);
/// Basis of the right kernel, one vector per column.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Monic characteristic polynomial det(xI - m), coefficients from x^0 upward.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// Header line "rows cols nonzeros", then one "row col num/den" line per
/// nonzero in row-major order (0-based indices).
void write_triplets(std::ostream& out, const RationalMatrix& m);

}  // namespace injwords
