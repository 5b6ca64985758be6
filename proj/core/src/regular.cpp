#include "injwords/regular.hpp"

#include "injwords/symmetric_group.hpp"

namespace injwords {

namespace {

template <class F>
void for_each_product_term(const GroupAlgebraElement& x, bool left, F&& f) {
  const auto& group = SymmetricGroup::of(x.degree());
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (const auto& [rank, c] : x.ranked_terms()) {
      const auto h = static_cast<std::size_t>(rank);
      f(left ? group.compose_index(h, g) : group.compose_index(g, h), g, c);
    }
  }
}

RationalMatrix multiplication_matrix(const GroupAlgebraElement& x, bool left) {
  std::vector<Triplet> t;
  for_each_product_term(x, left, [&](std::size_t row, std::size_t col, const Rational& c) { t.push_back(Triplet{row, col, c}); });
  const std::size_t order = SymmetricGroup::of(x.degree()).order();
  return RationalMatrix::from_triplets(order, order, std::move(t));
}

}  // namespace

RationalMatrix left_multiplication_matrix(const GroupAlgebraElement& x) { return multiplication_matrix(x, true); }

RationalMatrix right_multiplication_matrix(const GroupAlgebraElement& x) { return multiplication_matrix(x, false); }

modp::DenseMatrix right_multiplication_matrix(const GroupAlgebraElement& x, modp::Residue p) {
  const std::size_t order = SymmetricGroup::of(x.degree()).order();
  modp::DenseMatrix out(order, order, p);
  std::vector<std::pair<std::size_t, modp::Residue>> reduced;
  for (const auto& [rank, c] : x.ranked_terms()) reduced.emplace_back(static_cast<std::size_t>(rank), modp::reduce(c, p));
  const auto& group = SymmetricGroup::of(x.degree());
  for (std::size_t g = 0; g < order; ++g) {
    for (const auto& [h, c] : reduced) {
      auto& slot = out.at(group.compose_index(g, h), g);
      slot = (slot + c) % p;
    }
  }
  return out;
}

}  // namespace injwords
