#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "injwords/partition.hpp"

namespace injwords {

/// How the largest entry n of a size-n tableau is treated when asking for the
/// smallest descent.
///
/// kTerminal treats n as always being a descent, so every tableau has a
/// smallest descent (the single-row tableau has smallest descent n). This is
/// the convention under which the top-homology multiplicities of the
/// injective-word complex are counted by tableaux with even smallest descent.
/// kNone gives descent-free tableaux no smallest descent at all.
enum class DescentConvention { kTerminal, kNone };

class StandardTableau {
 public:
  /// Rows of entries; validated to be a standard filling of its shape.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  /// 0-based row holding `entry`.
  int row_of(int entry) const { return row_of_[static_cast<std::size_t>(entry)]; }

  /// Entries i in 1..n-1 with i+1 in a strictly lower row.
  std::vector<int> descents() const;
  std::optional<int> smallest_descent(DescentConvention convention = DescentConvention::kTerminal) const;

  std::string to_string() const;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> row_of_;
};

/// Every standard Young tableau of the shape.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// f_λ by the hook length formula.
std::uint64_t count_standard_tableaux(const Partition& shape);

/// Number of standard tableaux of the shape whose smallest descent is even.
std::uint64_t count_even_smallest_descent(const Partition& shape, DescentConvention convention);

}  // namespace injwords
