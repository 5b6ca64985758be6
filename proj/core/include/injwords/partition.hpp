#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace injwords {

/// Integer partition with parts stored in weakly decreasing order.
///
/// Doubles as a cycle type: `multiplicity(l)` is the number of l-cycles.
class Partition {
 public:
  Partition() = default;
  /// Parts may be given in any order; they are sorted. Zero parts are dropped,
  /// negative parts are rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  /// i-th part (0-based), 0 past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int multiplicity(int part_length) const;
  bool contains(const Partition& inner) const;
  Partition conjugate() const;

  /// "(3,1,1)"; the empty partition prints as "()".
  std::string to_string() const;

  // Lexicographic on the parts vector, so descending order of partitions of
  // the same n is reverse-lexicographic: (4) > (3,1) > (2,2) > ...
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, starting with (n).
std::vector<Partition> partitions(int n);

/// Number of permutations with this cycle type: n! / prod_l l^{m_l} m_l!.
std::uint64_t class_size(const Partition& cycle_type);

/// Order of the centralizer of a permutation of this cycle type.
std::uint64_t centralizer_order(const Partition& cycle_type);

/// (-1)^{n - length}.
int class_sign(const Partition& cycle_type);

}  // namespace injwords
