#include "injwords/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace injwords {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow");
  return out;
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // out * (n-k+i) / i stays integral at every step
    out = checked_mul(out, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return out;
}

std::uint64_t falling_factorial(int n, int r) {
  if (r < 0) throw std::invalid_argument("falling factorial with negative length");
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < r; ++i) out = checked_mul(out, static_cast<std::uint64_t>(n - i));
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

std::uint64_t lcm_up_to(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = lcm_u64(out, static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace injwords
