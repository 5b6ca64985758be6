#include "injwords/complex.hpp"

#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/eulerian.hpp"
#include "injwords/words.hpp"

namespace injwords {

namespace {

void require_degree(int n, int r, int lo, int hi) {
  if (n < 0 || r < lo || r > hi) throw std::invalid_argument("chain degree out of range");
}

// Candidate primes for modular certificates; a prime dividing some
// denominator is skipped by the callers.
constexpr std::size_t kPrimeAttempts = 4;

}  // namespace

RationalMatrix boundary_matrix(int n, int r) {
  require_degree(n, r, 1, n);
  const auto words = basis(n, r);
  std::vector<Triplet> t;
  t.reserve(words.size() * static_cast<std::size_t>(r));
  std::vector<int> shorter(static_cast<std::size_t>(r - 1));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto letters = words[col].letters();
    for (int j = 0; j < r; ++j) {
      std::size_t at = 0;
      for (int q = 0; q < r; ++q) {
        if (q != j) shorter[at++] = letters[static_cast<std::size_t>(q)];
      }
      t.push_back(Triplet{word_index(n, shorter), col, Rational(j % 2 ? -1 : 1)});
    }
  }
  return RationalMatrix::from_triplets(falling_factorial(n, r - 1), words.size(), std::move(t));
}

RationalMatrix coboundary_matrix(int n, int r) {
  require_degree(n, r, 0, n - 1);
  return boundary_matrix(n, r + 1).transpose();
}

RationalMatrix restricted_boundary_matrix(int n, int r, int letter) {
  require_degree(n, r, 1, n);
  const auto words = basis(n, r);
  std::vector<Triplet> t;
  std::vector<int> shorter(static_cast<std::size_t>(r - 1));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const int j = words[col].position_of(letter);
    if (!j) continue;
    const auto letters = words[col].letters();
    std::size_t at = 0;
    for (int q = 1; q <= r; ++q) {
      if (q != j) shorter[at++] = letters[static_cast<std::size_t>(q - 1)];
    }
    t.push_back(Triplet{word_index(n, shorter), col, Rational(j % 2 ? 1 : -1)});
  }
  return RationalMatrix::from_triplets(falling_factorial(n, r - 1), words.size(), std::move(t));
}

RationalMatrix laplacian(int n, int r) {
  require_degree(n, r, 0, n);
  const std::size_t dim = falling_factorial(n, r);
  RationalMatrix out(dim, dim);
  if (r >= 1) {
    const auto d = boundary_matrix(n, r);
    out += d.transpose() * d;
  }
  if (r < n) {
    const auto d = boundary_matrix(n, r + 1);
    out += d * d.transpose();
  }
  return out;
}

namespace {

// Calls f(row, col, coefficient) for every term of the position action.
template <class F>
void for_each_position_term(const GroupAlgebraElement& x, int n, F&& f) {
  const int r = x.degree();
  if (r > n) throw std::invalid_argument("position action needs degree <= n");
  const auto words = basis(n, r);
  const auto terms = x.terms();
  std::vector<int> moved(static_cast<std::size_t>(r));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto letters = words[col].letters();
    for (const auto& [pi, c] : terms) {
      for (int q = 1; q <= r; ++q) moved[static_cast<std::size_t>(q - 1)] = letters[static_cast<std::size_t>(pi(q) - 1)];
      f(word_index(n, moved), col, c);
    }
  }
}

}  // namespace

RationalMatrix position_action_matrix(const GroupAlgebraElement& x, int n) {
  std::vector<Triplet> t;
  for_each_position_term(x, n, [&](std::size_t row, std::size_t col, const Rational& c) { t.push_back(Triplet{row, col, c}); });
  const std::size_t dim = falling_factorial(n, x.degree());
  return RationalMatrix::from_triplets(dim, dim, std::move(t));
}

modp::DenseMatrix position_action_matrix(const GroupAlgebraElement& x, int n, modp::Residue p) {
  const std::size_t dim = falling_factorial(n, x.degree());
  modp::DenseMatrix out(dim, dim, p);
  std::vector<std::pair<Permutation, modp::Residue>> reduced;
  for (const auto& [pi, c] : x.terms()) reduced.emplace_back(pi, modp::reduce(c, p));
  const int r = x.degree();
  const auto words = basis(n, r);
  std::vector<int> moved(static_cast<std::size_t>(r));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto letters = words[col].letters();
    for (const auto& [pi, c] : reduced) {
      for (int q = 1; q <= r; ++q) moved[static_cast<std::size_t>(q - 1)] = letters[static_cast<std::size_t>(pi(q) - 1)];
      auto& slot = out.at(word_index(n, moved), col);
      slot = (slot + c) % p;
    }
  }
  return out;
}

RationalMatrix value_action_matrix(const Permutation& g, int r) {
  const int n = g.degree();
  require_degree(n, r, 0, n);
  const auto words = basis(n, r);
  std::vector<Triplet> t;
  std::vector<int> renamed(static_cast<std::size_t>(r));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto letters = words[col].letters();
    for (int q = 0; q < r; ++q) renamed[static_cast<std::size_t>(q)] = g(letters[static_cast<std::size_t>(q)]);
    t.push_back(Triplet{word_index(n, renamed), col, Rational(1)});
  }
  return RationalMatrix::from_triplets(words.size(), words.size(), std::move(t));
}

RationalMatrix hodge_projector(int n, int r, int k) {
  require_degree(n, r, 1, n);
  return position_action_matrix(eulerian_idempotent(r, k), n);
}

RationalMatrix hodge_component_basis(int n, int r, int k) { return column_space_basis(hodge_projector(n, r, k)); }

std::vector<std::size_t> hodge_component_dimensions(int n, int r) {
  require_degree(n, r, 0, n);
  const std::size_t dim = falling_factorial(n, r);
  if (r == 0) return {dim};
  const auto& idempotents = eulerian_idempotents(r);
  // Modular ranks never exceed rational ones, and the exact ranks of a
  // complete family of orthogonal idempotents sum to the dimension, so a
  // modular sum equal to the dimension certifies every term.
  for (std::size_t attempt = 0; attempt < kPrimeAttempts; ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    std::vector<std::size_t> ranks;
    std::size_t total = 0;
    try {
      for (const auto& e : idempotents) {
        ranks.push_back(modp::rank(position_action_matrix(e, n, p)));
        total += ranks.back();
      }
    } catch (const std::domain_error&) {
      continue;
    }
    if (total == dim) return ranks;
  }
  std::vector<std::size_t> ranks;
  for (const auto& e : idempotents) ranks.push_back(rank(position_action_matrix(e, n)));
  return ranks;
}

std::size_t hodge_component_dimension(int n, int r, int k) {
  if (k < 1 || k > r) throw std::invalid_argument("Hodge index out of range");
  return hodge_component_dimensions(n, r)[static_cast<std::size_t>(k - 1)];
}

std::vector<std::size_t> boundary_ranks(int n) {
  if (n < 1) throw std::invalid_argument("boundary ranks need n >= 1");
  std::vector<RationalMatrix> d(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) d[static_cast<std::size_t>(r)] = boundary_matrix(n, r);
  // If rank_p ∂_{r+1} = dim M_r - rank_p ∂_r for every r < n, the complex
  // is exact below the top modulo p; since rank_p <= rank over ℚ and
  // rank ∂_{r+1} <= dim M_r - rank ∂_r over ℚ, all modular ranks are exact.
  for (std::size_t attempt = 0; attempt < kPrimeAttempts; ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
    bool certified = true;
    for (int r = 1; r <= n && certified; ++r) {
      ranks[static_cast<std::size_t>(r)] = modp::rank(modp::reduce_dense(d[static_cast<std::size_t>(r)], p));
      const std::size_t expected = falling_factorial(n, r - 1) - ranks[static_cast<std::size_t>(r - 1)];
      certified = ranks[static_cast<std::size_t>(r)] == expected;
    }
    if (certified) return ranks;
  }
  std::vector<std::size_t> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 1; r <= n; ++r) ranks[static_cast<std::size_t>(r)] = rank(d[static_cast<std::size_t>(r)]);
  return ranks;
}

std::vector<std::size_t> homology_dimensions(int n) {
  const auto ranks = boundary_ranks(n);
  std::vector<std::size_t> out(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    const std::size_t next = r < n ? ranks[static_cast<std::size_t>(r + 1)] : 0;
    out[static_cast<std::size_t>(r)] = falling_factorial(n, r) - ranks[static_cast<std::size_t>(r)] - next;
  }
  return out;
}

std::vector<HodgeHomology> hodge_homology_table(int n) {
  if (n < 1) throw std::invalid_argument("Hodge homology needs n >= 1");
  std::vector<std::vector<std::size_t>> dims(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) dims[static_cast<std::size_t>(r)] = hodge_component_dimensions(n, r);
  // dim M_r^(j); M_0 is the j = 0 piece.
  auto piece = [&](int r, int j) -> std::int64_t {
    if (r == 0) return j == 0 ? 1 : 0;
    if (j < 1 || j > r) return 0;
    return static_cast<std::int64_t>(dims[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)]);
  };

  std::vector<HodgeHomology> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    auto& h = out[static_cast<std::size_t>(k - 1)];
    h.n = n;
    h.k = k;
    for (int r = n; r >= 0 && k - (n - r) >= 0; --r) {
      const std::int64_t sign = (n - r) % 2 ? -1 : 1;
      h.euler_characteristic += sign * piece(r, k - (n - r));
    }
  }

  // ker Λ_n ∩ M_n^(k) has dimension dim M_n^(k) - rank(Λ_n P_k). The ranks
  // rank(Λ_n P_k) = rank(∂_n P_k) add up to rank ∂_n because ∂_n carries the
  // k-th piece into the (k-1)-st, so a modular total equal to the exact rank
  // of ∂_n certifies each term.
  const auto lap = laplacian(n, n);
  const std::size_t top_rank = boundary_ranks(n)[static_cast<std::size_t>(n)];
  const auto& idempotents = eulerian_idempotents(n);
  std::vector<std::size_t> image_ranks;
  for (std::size_t attempt = 0; attempt < kPrimeAttempts && image_ranks.empty(); ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    std::vector<std::size_t> ranks;
    std::size_t total = 0;
    try {
      const auto lap_p = modp::reduce_sparse(lap, p);
      for (const auto& e : idempotents) {
        ranks.push_back(modp::rank(modp::multiply(lap_p, position_action_matrix(e, n, p))));
        total += ranks.back();
      }
    } catch (const std::domain_error&) {
      continue;
    }
    if (total == top_rank) image_ranks = std::move(ranks);
  }
  if (image_ranks.empty()) {
    for (const auto& e : idempotents) image_ranks.push_back(rank(lap * position_action_matrix(e, n)));
  }
  for (int k = 1; k <= n; ++k) {
    out[static_cast<std::size_t>(k - 1)].laplacian_kernel =
        dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] - image_ranks[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

HodgeHomology hodge_homology(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("Hodge index out of range");
  return hodge_homology_table(n)[static_cast<std::size_t>(k - 1)];
}

std::size_t hodge_homology_dimension(int n, int k) {
  const auto h = hodge_homology(n, k);
  if (!h.agree()) {
    throw std::runtime_error("Hodge homology mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ": Euler characteristic " + std::to_string(h.euler_characteristic) +
                             ", Laplacian kernel " + std::to_string(h.laplacian_kernel));
  }
  return h.laplacian_kernel;
}

}  // namespace injwords
