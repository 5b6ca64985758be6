#include <doctest.h>

#include <algorithm>
#include <set>

#include "injwords/combinatorics.hpp"
#include "injwords/partition.hpp"
#include "injwords/permutation.hpp"
#include "injwords/sn_character.hpp"
#include "injwords/symmetric_group.hpp"
#include "injwords/tableau.hpp"

using namespace injwords;

namespace {

int inversions(const Permutation& p) {
  int count = 0;
  const auto w = p.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  }
  return count;
}

}  // namespace

TEST_CASE("composition evaluates right to left") {
  const Permutation p{2, 1, 3};
  const Permutation q{1, 3, 2};
  CHECK(compose(p, q) == Permutation{2, 3, 1});
  for (int x = 1; x <= 3; ++x) CHECK(compose(p, q)(x) == p(q(x)));
  CHECK(compose(Permutation::identity(3), p) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS(compose(p, Permutation::identity(2)));
  CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("sign, descents and cycle type") {
  const auto s = statistics(Permutation{3, 1, 2});
  CHECK(s.sign == 1);
  CHECK(s.descents == std::vector<int>{1});
  CHECK(s.cycle_type == Partition{3});
  const auto t = statistics(Permutation{2, 1});
  CHECK(t.sign == -1);
  CHECK(t.cycle_type == Partition{2});
  const auto id = statistics(Permutation::identity(4));
  CHECK(id.descents.empty());
  CHECK(id.cycle_type == Partition{1, 1, 1, 1});
  for (const auto& p : all_permutations(5)) {
    CHECK(p.sign() == (inversions(p) % 2 ? -1 : 1));
    CHECK(lex_unrank(5, lex_rank(p.word())) == p);
  }
}

TEST_CASE("letter insertion") {
  const GappedPermutation sigma(3, 2, {1, 3});
  const auto tau = insert_letter(sigma, 1);
  CHECK(tau == Permutation{2, 1, 3});
  CHECK(tau.sign() == -1);
  CHECK(insert_letter(GappedPermutation(3, 3, {1, 2}), 3) == Permutation::identity(3));
  // Inserting 2 into each arrangement of {1,3,4}: j+1 of the 4 positions keep
  // the descent count.
  for (const auto& base : all_permutations(3)) {
    std::vector<int> word;
    for (int x : base.word()) word.push_back(x >= 2 ? x + 1 : x);
    const GappedPermutation g(4, 2, word);
    int same = 0;
    for (int d = 1; d <= 4; ++d) same += insert_letter(g, d).descent_count() == g.descent_count();
    CHECK(same == g.descent_count() + 1);
  }
  CHECK_THROWS(GappedPermutation(3, 2, {1, 2}));
}

TEST_CASE("conjugacy classes and centralizers") {
  const auto classes = conjugacy_classes(4);
  CHECK(classes.size() == 5);
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 6, 3, 8, 6});
  CHECK(conjugacy_classes(1).size() == 1);

  const auto d41 = derangement_classes(4, 1);
  REQUIRE(d41.size() == 1);
  CHECK(d41[0].cycle_type == Partition{4});
  CHECK(d41[0].size == 6);
  CHECK(derangement_classes(3, 2).empty());
  const auto d63 = derangement_classes(6, 3);
  REQUIRE(d63.size() == 1);
  CHECK(d63[0].cycle_type == Partition{2, 2, 2});
  CHECK(d63[0].size == 15);

  CHECK(centralizer_elements(Permutation::identity(3)).size() == 6);
  const auto three_cycle = Permutation{2, 3, 1};
  const auto z = centralizer_elements(three_cycle);
  CHECK(z.size() == 3);
  CHECK(std::find(z.begin(), z.end(), three_cycle * three_cycle) != z.end());
  CHECK(centralizer_elements(Permutation{2, 1, 4, 3}).size() == 8);

  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& c : conjugacy_classes(n)) {
      total += c.size;
      CHECK(centralizer_elements(c.representative).size() * c.size == factorial(n));
      CHECK(c.representative.cycle_type() == c.cycle_type);
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("standard tableaux and their descents") {
  const auto t21 = standard_tableaux(Partition{2, 1});
  REQUIRE(t21.size() == 2);
  std::set<std::vector<int>> descent_sets;
  for (const auto& t : t21) descent_sets.insert(t.descents());
  CHECK(descent_sets == std::set<std::vector<int>>{{1}, {2}});
  const auto row = standard_tableaux(Partition{4});
  REQUIRE(row.size() == 1);
  CHECK(row[0].descents().empty());
  CHECK_FALSE(row[0].smallest_descent(DescentConvention::kNone).has_value());
  CHECK(row[0].smallest_descent(DescentConvention::kTerminal) == 4);
  CHECK(count_standard_tableaux(Partition{2, 2}) == 2);
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (const auto& lambda : partitions(n)) sum += count_standard_tableaux(lambda) * count_standard_tableaux(lambda);
    CHECK(sum == factorial(n));
  }
  CHECK_NOTHROW(StandardTableau({{1, 3}, {2, 4}, {5, 6}}));
  CHECK_THROWS(StandardTableau({{1, 4}, {2, 3}}));
  CHECK_THROWS(StandardTableau({{1}, {2, 3}}));
}

TEST_CASE("irreducible characters") {
  CHECK(irreducible_character(Partition{2, 1}, Partition{3}) == -1);
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions(n);
    for (const auto& mu : parts) {
      CHECK(irreducible_character(Partition(std::vector<int>{n}), mu) == 1);
      CHECK(irreducible_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), mu) == class_sign(mu));
    }
    for (const auto& a : parts) {
      CHECK(irreducible_character(a, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            static_cast<std::int64_t>(count_standard_tableaux(a)));
      for (const auto& b : parts) {
        std::int64_t sum = 0;
        for (const auto& mu : parts) {
          sum += static_cast<std::int64_t>(class_size(mu)) * irreducible_character(a, mu) * irreducible_character(b, mu);
        }
        CHECK(sum == (a == b ? static_cast<std::int64_t>(factorial(n)) : 0));
      }
    }
  }
  CHECK_THROWS(irreducible_character(Partition{2, 1}, Partition{2}));
}
