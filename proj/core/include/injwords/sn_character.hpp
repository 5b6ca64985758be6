#pragma once

#include <cstdint>
#include <vector>

#include "injwords/partition.hpp"

namespace injwords {

/// χ^λ evaluated on the class of cycle type μ (Murnaghan–Nakayama rule).
/// Throws std::invalid_argument when |λ| != |μ|.
std::int64_t irreducible_character(const Partition& lambda, const Partition& mu);

/// Rows indexed by partitions(n) (λ), columns by partitions(n) (μ), both in
/// reverse-lexicographic order.
std::vector<std::vector<std::int64_t>> character_table(int n);

}  // namespace injwords
