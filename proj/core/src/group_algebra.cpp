#include "injwords/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "injwords/symmetric_group.hpp"

namespace injwords {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
  GroupAlgebraElement x(degree);
  x.terms_.emplace(0, Rational(1));
  return x;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, const Rational& coefficient) {
  GroupAlgebraElement x(p.degree());
  x.add_term(p, coefficient);
  return x;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("coefficient: degree mismatch");
  auto it = terms_.find(lex_rank(p.word()));
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& coefficient) {
  if (p.degree() != degree_) throw std::invalid_argument("add_term: degree mismatch");
  add_ranked_term(lex_rank(p.word()), coefficient);
}

void GroupAlgebraElement::add_ranked_term(std::uint64_t rank, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(rank, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Permutation, Rational>> GroupAlgebraElement::terms() const {
  std::vector<std::pair<Permutation, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [rank, c] : terms_) out.emplace_back(lex_unrank(degree_, rank), c);
  return out;
}

Rational GroupAlgebraElement::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [rank, c] : terms_) s += c;
  return s;
}

GroupAlgebraElement GroupAlgebraElement::sign_twist() const {
  GroupAlgebraElement out(degree_);
  for (const auto& [rank, c] : terms_) {
    const int s = lex_unrank(degree_, rank).sign();
    out.terms_.emplace(rank, s > 0 ? c : Rational(-c));
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::antipode() const {
  GroupAlgebraElement out(degree_);
  for (const auto& [rank, c] : terms_) {
    out.terms_.emplace(lex_rank(lex_unrank(degree_, rank).inverse().word()), c);
  }
  return out;
}

void GroupAlgebraElement::require_same_degree(const GroupAlgebraElement& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("group algebra degree mismatch");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_same_degree(other);
  for (const auto& [rank, c] : other.terms_) add_ranked_term(rank, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  require_same_degree(other);
  for (const auto& [rank, c] : other.terms_) add_ranked_term(rank, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [rank, c] : terms_) c *= scalar;
  return *this;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) { return a *= s; }

namespace {

// Integer numerators over a common denominator.
struct Scaled {
  std::vector<std::size_t> index;
  std::vector<Integer> numerator;
  Integer denominator = 1;
  Integer max_abs = 0;
};

Scaled scale(const GroupAlgebraElement& x) {
  Scaled s;
  for (const auto& [rank, c] : x.ranked_terms()) {
    mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [rank, c] : x.ranked_terms()) {
    s.index.push_back(static_cast<std::size_t>(rank));
    Integer v = c.get_num() * (s.denominator / c.get_den());
    if (abs(v) > s.max_abs) s.max_abs = abs(v);
    s.numerator.push_back(std::move(v));
  }
  return s;
}

}  // namespace

GroupAlgebraElement product(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("product: degree mismatch");
  const int r = x.degree();
  GroupAlgebraElement out(r);
  if (x.is_zero() || y.is_zero()) return out;

  const auto& group = SymmetricGroup::of(r);
  const Scaled a = scale(x);
  const Scaled b = scale(y);
  const std::size_t order = group.order();

  // Accumulate in __int128 when the worst case sum provably fits.
  const Integer worst = a.max_abs * b.max_abs * static_cast<unsigned long>(std::min(a.index.size(), b.index.size()));
  const bool small = mpz_sizeinbase(worst.get_mpz_t(), 2) < 120 && mpz_fits_slong_p(a.max_abs.get_mpz_t()) &&
                     mpz_fits_slong_p(b.max_abs.get_mpz_t());
  const Rational denom(Integer(a.denominator * b.denominator));
  if (small) {
    std::vector<__int128> acc(order, 0);
    std::vector<long> bv(b.numerator.size());
    for (std::size_t j = 0; j < bv.size(); ++j) bv[j] = b.numerator[j].get_si();
    for (std::size_t i = 0; i < a.index.size(); ++i) {
      const __int128 ai = a.numerator[i].get_si();
      for (std::size_t j = 0; j < b.index.size(); ++j) {
        acc[group.compose_index(a.index[i], b.index[j])] += ai * bv[j];
      }
    }
    for (std::size_t k = 0; k < order; ++k) {
      if (acc[k] == 0) continue;
      const __int128 v = acc[k];
      const bool neg = v < 0;
      unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      Integer z(static_cast<unsigned long>(m >> 64));
      z <<= 64;
      z += static_cast<unsigned long>(static_cast<std::uint64_t>(m));
      if (neg) z = -z;
      out.add_ranked_term(k, Rational(z) / denom);
    }
    return out;
  }
  std::vector<Integer> acc(order);
  for (std::size_t i = 0; i < a.index.size(); ++i) {
    for (std::size_t j = 0; j < b.index.size(); ++j) {
      acc[group.compose_index(a.index[i], b.index[j])] += a.numerator[i] * b.numerator[j];
    }
  }
  for (std::size_t k = 0; k < order; ++k) {
    if (acc[k] != 0) out.add_ranked_term(k, Rational(acc[k]) / denom);
  }
  return out;
}

std::vector<SerializedTerm> serialize(const GroupAlgebraElement& x) {
  std::vector<SerializedTerm> out;
  for (const auto& [p, c] : x.terms()) {
    out.push_back(SerializedTerm{p.to_string(), c.get_num().get_str(), c.get_den().get_str()});
  }
  return out;
}

}  // namespace injwords
