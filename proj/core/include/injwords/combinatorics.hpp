#pragma once

#include <cstdint>

namespace injwords {

// Small exact integer helpers. All of them throw std::overflow_error rather
// than wrapping.

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// n (n-1) ... (n-r+1); the dimension of the chain group M_r over {1..n}.
std::uint64_t falling_factorial(int n, int r);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// lcm(1, ..., n); the cyclotomic conductor used for characters of S_n.
std::uint64_t lcm_up_to(int n);

}  // namespace injwords
