#include <doctest.h>

#include "injwords/characters.hpp"
#include "injwords/class_function.hpp"
#include "injwords/combinatorics.hpp"
#include "injwords/cyclotomic.hpp"
#include "injwords/symmetric_group.hpp"

using namespace injwords;

namespace {

ClassFunction ints(int n, const std::vector<std::int64_t>& v) { return ClassFunction::from_integers(n, v); }

// Values are listed in partitions(n) order, identity class last.
Rational at(const ClassFunction& chi, const Partition& mu) { return *chi.value(mu).rational_value(); }

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  CHECK(CyclotomicValue::root_of_unity(0, 1, 1) == CyclotomicValue::from_rational(1, 1));
  CHECK(CyclotomicValue::root_of_unity(1, 2, 2) == CyclotomicValue::from_rational(-1, 2));
  const auto z = CyclotomicValue::root_of_unity(1, 3, 3);
  CHECK(z + z * z == CyclotomicValue::from_rational(-1, 3));
  CHECK(z * z * z == CyclotomicValue::from_rational(1, 3));
  CHECK_FALSE(z.is_rational());
  // Roots of unity of order 4 inside the field of 12th roots.
  const auto i = CyclotomicValue::root_of_unity(1, 4, 12);
  CHECK(i * i == CyclotomicValue::from_rational(-1, 12));
  CHECK_THROWS(CyclotomicValue::root_of_unity(1, 5, 12));
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("the linear character on the centralizer") {
  const auto c = Permutation{2, 3, 1};
  CHECK(psi_value(c, Permutation::identity(3)) == CyclotomicValue::from_rational(1, lcm_up_to(3)));
  CHECK(psi_value(c, c) == CyclotomicValue::root_of_unity(1, 3, lcm_up_to(3)));
  CHECK_THROWS(psi_value(c, Permutation{2, 1, 3}));
}

TEST_CASE("induced characters") {
  const auto chi = induced_chi(Permutation{2, 3, 1});
  CHECK(chi.integer_values() == std::vector<std::int64_t>{-1, 0, 2});
  CHECK(chi == irreducible(Partition{2, 1}));
  // Inducing from the full group at the identity gives the trivial character.
  CHECK(induced_chi(Permutation::identity(3)) == ints(3, {1, 1, 1}));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& cls : conjugacy_classes(n)) {
      const auto x = induced_chi(cls.representative);
      CHECK(x.is_integral());
      CHECK(x.integer_values().back() * static_cast<std::int64_t>(centralizer_order(cls.cycle_type)) ==
            static_cast<std::int64_t>(factorial(n)));
      CHECK(*inner_product(x, x).rational_value() >= 1);
    }
  }
}

TEST_CASE("module characters") {
  CHECK(module_character(4, 4, std::nullopt).integer_values().back() == 24);
  const auto m32 = module_character(3, 2, std::nullopt);
  CHECK(at(m32, Partition{1, 1, 1}) == 6);
  CHECK(at(m32, Partition{2, 1}) == 0);
  CHECK(at(m32, Partition{3}) == 0);
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      CHECK(module_character(n, r, std::nullopt) == induced_word_character(n, r, false));
      for (int k = 1; k <= r; ++k) CHECK(module_character(n, r, k) == module_character_by_matrices(n, r, k));
    }
  }
}

TEST_CASE("Hodge characters") {
  CHECK(hodge_character(3, 1) == ints(3, {-1, 0, 2}));
  CHECK(hodge_character(3, 2) == ClassFunction(3));
  CHECK(hodge_character(3, 3) == ClassFunction(3));
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(hodge_character(n, k) == hodge_character_by_kernel(n, k));
  }
  // H_2 is spanned by 12 + 21, so it is the trivial module.
  CHECK(top_homology_character(2) == ints(2, {1, 1}));
}

TEST_CASE("Hodge pieces as sums of induced characters") {
  CHECK(verify_hodge_piece_theorem(3, 1).equal);
  const auto c42 = verify_hodge_piece_theorem(4, 2);
  CHECK(c42.equal);
  CHECK(c42.rhs.integer_values().back() == 3);
  CHECK(verify_hodge_piece_theorem(3, 2).equal);
  CHECK(verify_hodge_piece_theorem(3, 2).lhs == ClassFunction(3));
}

TEST_CASE("Eulerian ideals") {
  CHECK(ideal_character(2, 2) == ints(2, {-1, 1}));
  CHECK(verify_ideal_theorem(2, 2).equal);
  CHECK(ideal_character(3, 3).integer_values().back() == 1);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(verify_ideal_theorem(n, k).equal);
  }
}

TEST_CASE("tableau multiplicities") {
  const auto check3 = verify_reiner_webb(3);
  CHECK(check3.holds);
  CHECK(check3.dimension == 2);
  for (const auto& row : check3.rows) CHECK(row.multiplicity == (row.shape == Partition{2, 1} ? 1 : 0));
  const auto check2 = verify_reiner_webb(2);
  CHECK(check2.holds);
  CHECK(check2.rows[0].shape == Partition{2});
  CHECK(check2.rows[0].multiplicity == 1);
  CHECK_FALSE(verify_reiner_webb(2, DescentConvention::kNone).holds);
}

TEST_CASE("cycle index") {
  const auto z = cycle_index(ints(2, {1, 1}));
  CHECK(z.to_string() == "1/2 a1^2 + 1/2 a2");
  CHECK(cycle_index(ClassFunction(3)).is_zero());
  for (const auto& lambda : partitions(5)) CHECK(from_cycle_index(5, cycle_index(irreducible(lambda))) == irreducible(lambda));
}
