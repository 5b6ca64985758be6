#include <doctest.h>

#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/regular.hpp"
#include "injwords/shuffle.hpp"

using namespace injwords;

namespace {

RationalMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return RationalMatrix::from_dense(q);
}

// Brute-force random-to-random: remove the card at position a, reinsert it at
// position b, over all r² choices.
GroupAlgebraElement shuffle_oracle(int r) {
  GroupAlgebraElement out(r);
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      std::vector<int> positions;
      for (int p = 1; p <= r; ++p) {
        if (p != a) positions.push_back(p);
      }
      positions.insert(positions.begin() + (b - 1), a);
      out.add_term(Permutation(positions), 1);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("random-to-random elements") {
  const auto id2 = GroupAlgebraElement::identity(2);
  const auto tau = GroupAlgebraElement::basis(Permutation{2, 1});
  CHECK(random_to_random(2) == Rational(2) * id2 + Rational(2) * tau);
  CHECK(signed_random_to_random(2) == Rational(2) * id2 - Rational(2) * tau);
  CHECK(random_to_random(1) == GroupAlgebraElement::identity(1));
  CHECK(signed_random_to_random(1) == GroupAlgebraElement::identity(1));
  for (int r = 1; r <= 8; ++r) CHECK(random_to_random(r).coefficient_sum() == Rational(r * r));
  for (int r = 1; r <= 6; ++r) {
    const auto u = random_to_random(r);
    CHECK((u == shuffle_oracle(r) || u == shuffle_oracle(r).antipode()));
    CHECK(u.antipode() == u);
    CHECK(signed_random_to_random(r) == u.sign_twist());
    CHECK(left_multiplication_matrix(u).is_symmetric());
  }
}

TEST_CASE("transposition sums") {
  CHECK(transposition_sum(1, 2, 2) == GroupAlgebraElement::basis(Permutation{2, 1}));
  CHECK(transposition_sum(1, 3, 3).support_size() == 3);
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto cut = cut_transposition_sum(n, r);
      CHECK(cut.support_size() == static_cast<std::size_t>(r * (n - r)));
      CHECK(cut == transposition_sum(1, n, n) - transposition_sum(1, r, n) - transposition_sum(r + 1, n, n));
    }
  }
  CHECK_THROWS(transposition_sum(3, 2, 4));
  CHECK_THROWS(transposition_sum(1, 5, 4));
}

TEST_CASE("top Laplacian is the signed shuffle") {
  for (int n = 1; n <= 6; ++n) CHECK(laplacian(n, n) == position_action_matrix(signed_random_to_random(n), n));
}

TEST_CASE("Laplacian formula and its cross-term sign") {
  CHECK(laplacian_by_formula(2, 1, -1) == dense({{3, -1}, {-1, 3}}));
  CHECK(laplacian_by_formula(3, 1, -1) == laplacian(3, 1));
  CHECK(laplacian_by_formula(3, 1, 1) != laplacian(3, 1));
  CHECK(laplacian_by_formula(3, 3, 1) == laplacian_by_formula(3, 3, -1));
  const auto res = resolve_cross_term_sign(5);
  REQUIRE(res.sign.has_value());
  CHECK(*res.sign == -1);
  for (const auto& probe : res.probes) CHECK(probe.minus_matches);
  CHECK_THROWS(laplacian_by_formula(3, 1, 0));
}

TEST_CASE("Omega") {
  CHECK(omega_matrix(2, 1, -1) == dense({{2, -1}, {-1, 2}}));
  CHECK(omega_matrix(3, 3, -1).is_zero());
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto u = position_action_matrix(signed_random_to_random(r), n);
      CHECK(commutator(omega_matrix(n, r, -1), u).is_zero());
      CHECK(omega_matrix(n, r, -1) + u == laplacian(n, r));
    }
  }
}

TEST_CASE("value transpositions match position transpositions on symmetrized words") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      const auto e = symmetrizing_embedding(n, r);
      CHECK(position_action_matrix(cut_transposition_sum(n, r), n) * e == e * value_transposition_matrix(n, r));
    }
  }
}
