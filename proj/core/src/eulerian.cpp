#include "injwords/eulerian.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/symmetric_group.hpp"

namespace injwords {

namespace {

void check_range(int r, int k) {
  if (r < 1) throw std::invalid_argument("Eulerian elements need r >= 1");
  if (k < 1 || k > r) throw std::out_of_range("Eulerian index k out of range 1..r");
}

// Inverse of the r×r matrix V[k][j] = k^j (k, j = 1..r) by Gauss–Jordan.
std::vector<std::vector<Rational>> inverse_vandermonde(int r) {
  const auto n = static_cast<std::size_t>(r);
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t k = 0; k < n; ++k) {
    Rational power = 1;
    for (std::size_t j = 0; j < n; ++j) {
      power *= static_cast<long>(k + 1);
      a[k][j] = power;
    }
    a[k][n + k] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (a[pivot][c] == 0) ++pivot;  // Vandermonde on distinct nodes: always found
    std::swap(a[pivot], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

std::vector<GroupAlgebraElement> compute_idempotents(int r) {
  // signed_lambda[k-1] = (-1)^{k-1} λ_r^(k)
  std::vector<GroupAlgebraElement> signed_lambda;
  for (int k = 1; k <= r; ++k) {
    auto lam = lambda_element(r, k);
    if ((k - 1) % 2) lam *= Rational(-1);
    signed_lambda.push_back(std::move(lam));
  }
  const auto vinv = inverse_vandermonde(r);
  std::vector<GroupAlgebraElement> out;
  for (int j = 0; j < r; ++j) {
    GroupAlgebraElement e(r);
    for (int k = 0; k < r; ++k) {
      const Rational& c = vinv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      if (c != 0) e += c * signed_lambda[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

GroupAlgebraElement first_eulerian_summand(int r, int k) {
  check_range(r, k);
  GroupAlgebraElement out(r);
  const auto& group = SymmetricGroup::of(r);
  const int outer = (k - 1) % 2 ? -1 : 1;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (group.element(i).descent_count() == k - 1) out.add_ranked_term(i, Rational(outer * group.sign(i)));
  }
  return out;
}

GroupAlgebraElement lambda_element(int r, int k) {
  check_range(r, k);
  GroupAlgebraElement out(r);
  for (int i = 0; i < k; ++i) {
    const long sign = i % 2 ? -1 : 1;
    out += Rational(sign * static_cast<long>(binomial(r + i, i))) * first_eulerian_summand(r, k - i);
  }
  return out;
}

const std::vector<GroupAlgebraElement>& eulerian_idempotents(int r) {
  constexpr int kMaxCached = 9;
  if (r < 1 || r > kMaxCached) throw std::out_of_range("eulerian_idempotents: r out of range 1..9");
  static std::array<std::unique_ptr<std::vector<GroupAlgebraElement>>, kMaxCached + 1> cache;
  static std::array<std::once_flag, kMaxCached + 1> once;
  const auto slot = static_cast<std::size_t>(r);
  std::call_once(once[slot], [&] {
    cache[slot] = std::make_unique<std::vector<GroupAlgebraElement>>(compute_idempotents(r));
  });
  return *cache[slot];
}

const GroupAlgebraElement& eulerian_idempotent(int r, int k) {
  check_range(r, k);
  return eulerian_idempotents(r)[static_cast<std::size_t>(k - 1)];
}

}  // namespace injwords
