#include <doctest.h>

#include "injwords/eulerian.hpp"
#include "injwords/group_algebra.hpp"
#include "injwords/rational.hpp"

using namespace injwords;

namespace {

GroupAlgebraElement element(int r, const std::vector<std::pair<const char*, Rational>>& terms) {
  GroupAlgebraElement x(r);
  for (const auto& [w, c] : terms) x.add_term(Permutation::parse(w), c);
  return x;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational a = parse_rational("6/-4");
  CHECK(to_string(a) == "-3/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(is_integer(parse_rational("8/4")));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("group algebra products") {
  const auto id = GroupAlgebraElement::identity(2);
  const auto tau = GroupAlgebraElement::basis(Permutation{2, 1});
  const auto x = element(2, {{"12", Rational(3)}, {"21", Rational(-1, 2)}});
  CHECK(id * x == x);
  CHECK(((id + tau) * (id - tau)).is_zero());
  const auto& e = eulerian_idempotents(3);
  CHECK((e[0] * e[1]).is_zero());
  GroupAlgebraElement zero(2);
  zero.add_term(Permutation{2, 1}, 0);
  CHECK(zero.is_zero());
  CHECK_THROWS(id * GroupAlgebraElement::identity(3));
}

TEST_CASE("first Eulerian summands") {
  for (int r = 1; r <= 5; ++r) CHECK(first_eulerian_summand(r, 1) == GroupAlgebraElement::identity(r));
  CHECK(first_eulerian_summand(2, 2) == element(2, {{"21", Rational(1)}}));
  const auto l32 = first_eulerian_summand(3, 2);
  CHECK(l32.support_size() == 4);
  for (const auto& [p, c] : l32.terms()) {
    CHECK(p.descent_count() == 1);
    CHECK(c == Rational(-p.sign()));
  }
  CHECK_THROWS(first_eulerian_summand(3, 4));
  CHECK_THROWS(first_eulerian_summand(3, 0));
}

TEST_CASE("lambda elements") {
  CHECK(lambda_element(4, 1) == GroupAlgebraElement::identity(4));
  CHECK(lambda_element(2, 2) == first_eulerian_summand(2, 2) - Rational(3) * first_eulerian_summand(2, 1));
}

TEST_CASE("Eulerian idempotents in small degrees") {
  CHECK(eulerian_idempotents(1).size() == 1);
  CHECK(eulerian_idempotent(1, 1) == GroupAlgebraElement::identity(1));
  CHECK(eulerian_idempotent(2, 1) == element(2, {{"12", Rational(1, 2)}, {"21", Rational(1, 2)}}));
  CHECK(eulerian_idempotent(2, 2) == element(2, {{"12", Rational(1, 2)}, {"21", Rational(-1, 2)}}));
  CHECK(eulerian_idempotent(3, 2) == element(3, {{"123", Rational(1, 2)}, {"321", Rational(1, 2)}}));
  CHECK(eulerian_idempotent(3, 1) == element(3, {{"123", Rational(1, 3)}, {"132", Rational(1, 6)}, {"213", Rational(1, 6)},
                                                 {"231", Rational(-1, 6)}, {"312", Rational(-1, 6)}, {"321", Rational(-1, 3)}}));
}

TEST_CASE("Eulerian idempotents: orthogonal and complete through degree 6") {
  for (int r = 1; r <= 6; ++r) {
    const auto& e = eulerian_idempotents(r);
    GroupAlgebraElement sum(r);
    for (std::size_t j = 0; j < e.size(); ++j) {
      sum += e[j];
      for (std::size_t l = 0; l < e.size(); ++l) {
        const auto p = e[j] * e[l];
        CHECK((j == l ? p == e[j] : p.is_zero()));
      }
    }
    CHECK(sum == GroupAlgebraElement::identity(r));
  }
}

TEST_CASE("serialization is lexicographic") {
  const auto terms = serialize(eulerian_idempotent(3, 3));
  REQUIRE(terms.size() == 6);
  CHECK(terms.front().word == "123");
  CHECK(terms.back().word == "321");
  CHECK(terms[1].numerator == "-1");
  CHECK(terms[1].denominator == "6");
}
