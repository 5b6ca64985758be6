#include <doctest.h>

#include <sstream>

#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/eulerian.hpp"
#include "injwords/matrix.hpp"
#include "injwords/words.hpp"

using namespace injwords;

namespace {

std::uint64_t derangements(int n) {
  std::uint64_t count = 0;
  for (const auto& p : all_permutations(n)) count += p.fixed_point_count() == 0;
  return count;
}

RationalMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return RationalMatrix::from_dense(q);
}

}  // namespace

TEST_CASE("bases of injective words") {
  const auto b = basis(3, 2);
  std::vector<std::string> words;
  for (const auto& w : b) words.push_back(w.to_string());
  CHECK(words == std::vector<std::string>{"12", "13", "21", "23", "31", "32"});
  CHECK(basis(5, 0).size() == 1);
  CHECK(basis(4, 4).size() == 24);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto words_nr = basis(n, r);
      for (std::size_t i = 0; i < words_nr.size(); ++i) CHECK(word_index(n, words_nr[i].letters()) == i);
    }
  }
  CHECK_THROWS(basis(2, 3));
  CHECK_THROWS(InjectiveWord(3, {1, 1}));
}

TEST_CASE("boundary of words") {
  Chain expected(3, 2);
  expected.add_term(InjectiveWord(3, {2, 3}), 1);
  expected.add_term(InjectiveWord(3, {1, 3}), -1);
  expected.add_term(InjectiveWord(3, {1, 2}), 1);
  CHECK(boundary(InjectiveWord(3, {1, 2, 3})) == expected);
  const auto point = boundary(InjectiveWord(3, {2}));
  CHECK(point.coefficient(InjectiveWord(3, {})) == 1);
  CHECK_THROWS(boundary(InjectiveWord(3, {})));
  for (const auto& w : basis(5, 4)) CHECK(boundary(boundary(w)).is_zero());
}

TEST_CASE("boundary matrices and ranks") {
  CHECK(boundary_matrix(2, 2) == dense({{-1, 1}, {1, -1}}));
  CHECK(coboundary_matrix(3, 1) == boundary_matrix(3, 2).transpose());
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) CHECK((boundary_matrix(n, r) * boundary_matrix(n, r + 1)).is_zero());
  }
  CHECK(rank(boundary_matrix(3, 1)) == 1);
  CHECK(rank(boundary_matrix(3, 2)) == 2);
  CHECK(rank(boundary_matrix(3, 3)) == 4);
  CHECK_THROWS(boundary_matrix(3, 0));
}

TEST_CASE("Laplacians") {
  CHECK(laplacian(2, 2) == dense({{2, -2}, {-2, 2}}));
  CHECK(laplacian(2, 1) == dense({{3, -1}, {-1, 3}}));
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) CHECK(laplacian(n, r).is_symmetric());
    const auto top = laplacian(n, n);
    CHECK(top.rows() - rank(top) == derangements(n));
  }
}

TEST_CASE("position action") {
  CHECK(position_action_matrix(GroupAlgebraElement::identity(3), 4) == RationalMatrix::identity(24));
  const auto swap = position_action_matrix(GroupAlgebraElement::basis(Permutation{2, 1}), 2);
  CHECK(swap == dense({{0, 1}, {1, 0}}));
  // Reduced modulo a prime, the action agrees with the rational one.
  const auto p = modp::prime(0);
  const auto x = eulerian_idempotent(3, 1);
  CHECK(position_action_matrix(x, 4, p) == modp::reduce_dense(position_action_matrix(x, 4), p));
  CHECK_THROWS(position_action_matrix(GroupAlgebraElement::identity(4), 3));
}

TEST_CASE("Hodge components") {
  CHECK(hodge_component_basis(3, 3, 3).cols() == 1);
  CHECK(hodge_component_basis(3, 3, 1).cols() == 2);
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::uint64_t total = 0;
      for (auto d : hodge_component_dimensions(n, r)) total += d;
      CHECK(total == falling_factorial(n, r));
    }
  }
  CHECK_THROWS(hodge_projector(3, 2, 3));
}

TEST_CASE("homology") {
  CHECK(homology_dimensions(3) == std::vector<std::size_t>{0, 0, 0, 2});
  CHECK(homology_dimensions(4).back() == 9);
  CHECK(homology_dimensions(1) == std::vector<std::size_t>{0, 0});
  CHECK(hodge_homology_dimension(3, 1) == 2);
  CHECK(hodge_homology_dimension(4, 1) == 6);
  CHECK(hodge_homology_dimension(4, 2) == 3);
  CHECK(hodge_homology_dimension(4, 3) == 0);
  for (int n = 1; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& h : hodge_homology_table(n)) {
      CHECK(h.agree());
      total += h.laplacian_kernel;
    }
    CHECK(total == derangements(n));
  }
}

TEST_CASE("restricted boundary on idempotent chains") {
  const std::vector<int> full{1, 2, 3};
  const std::vector<int> rest{1, 3};
  CHECK(boundary_restricted(2, word_chain(eulerian_idempotent(3, 1), 3, full)).is_zero());
  CHECK(boundary_restricted(2, word_chain(eulerian_idempotent(3, 2), 3, full)) ==
        Rational(-1) * word_chain(eulerian_idempotent(2, 1), 3, rest));
  CHECK(boundary_restricted(2, word_chain(eulerian_idempotent(3, 3), 3, full)) ==
        Rational(-1) * word_chain(eulerian_idempotent(2, 2), 3, rest));
}

TEST_CASE("exact linear algebra") {
  const auto m = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(rank_bareiss(m) == 2);
  CHECK(rank_multimodular(m) == 2);
  const auto k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  const auto big = boundary_matrix(5, 4);
  CHECK(rank_by_kernel_lift(big).value_or(0) == rank_bareiss(big));
  CHECK(characteristic_polynomial(dense({{2, -2}, {-2, 2}})) == std::vector<Rational>{0, -4, 1});
  std::ostringstream out;
  write_triplets(out, dense({{0, 1}, {2, 0}}));
  CHECK(out.str() == "2 2 2\n0 1 1/1\n1 0 2/1\n");
}
