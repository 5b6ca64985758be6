#include "injwords/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "injwords/combinatorics.hpp"

namespace injwords {

InjectiveWord::InjectiveWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 0 || static_cast<int>(letters_.size()) > n) throw std::invalid_argument("word longer than its alphabet");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int a : letters_) {
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("letters must be distinct elements of {1..n}");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

bool InjectiveWord::contains(int letter) const { return position_of(letter) != 0; }

int InjectiveWord::position_of(int letter) const {
  auto it = std::find(letters_.begin(), letters_.end(), letter);
  return it == letters_.end() ? 0 : static_cast<int>(it - letters_.begin()) + 1;
}

InjectiveWord InjectiveWord::without_position(int position) const {
  if (position < 1 || position > length()) throw std::out_of_range("position outside word");
  InjectiveWord w = *this;
  w.letters_.erase(w.letters_.begin() + (position - 1));
  return w;
}

std::string InjectiveWord::to_string() const {
  if (letters_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (n_ > 9 && i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Rational Chain::coefficient(const InjectiveWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Chain::add_term(const InjectiveWord& w, const Rational& c) {
  if (w.ambient() != n_ || w.length() != degree_) throw std::invalid_argument("word does not belong to this chain group");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Chain::require_compatible(const Chain& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) throw std::invalid_argument("chains of different degree");
}

Chain& Chain::operator+=(const Chain& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Chain& Chain::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= scalar;
  }
  return *this;
}

Chain operator+(Chain a, const Chain& b) { return a += b; }
Chain operator-(Chain a, const Chain& b) { return a -= b; }
Chain operator*(const Rational& s, Chain a) { return a *= s; }

std::vector<InjectiveWord> basis(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("basis requires 0 <= r <= n");
  std::vector<InjectiveWord> out;
  out.reserve(falling_factorial(n, r));
  std::vector<int> letters;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(letters.size()) == r) {
      out.emplace_back(n, letters);
      return;
    }
    for (int a = 1; a <= n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = true;
      letters.push_back(a);
      self(self);
      letters.pop_back();
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  extend(extend);
  return out;
}

std::size_t word_index(int n, std::span<const int> letters) {
  const int r = static_cast<int>(letters.size());
  std::uint64_t used = 0;
  std::size_t index = 0;
  for (int i = 0; i < r; ++i) {
    const int a = letters[static_cast<std::size_t>(i)];
    const std::uint64_t below = used & ((std::uint64_t{1} << a) - 1);
    const int smaller_unused = (a - 1) - __builtin_popcountll(below);
    index += static_cast<std::size_t>(smaller_unused) * falling_factorial(n - i - 1, r - i - 1);
    used |= std::uint64_t{1} << a;
  }
  return index;
}

Chain boundary(const InjectiveWord& w) {
  if (w.length() == 0) throw std::invalid_argument("boundary of the empty word");
  Chain out(w.ambient(), w.length() - 1);
  for (int j = 1; j <= w.length(); ++j) out.add_term(w.without_position(j), (j % 2) ? 1 : -1);
  return out;
}

Chain boundary(const Chain& c) {
  if (c.degree() == 0) throw std::invalid_argument("boundary of a degree-0 chain");
  Chain out(c.ambient(), c.degree() - 1);
  for (const auto& [w, coeff] : c.terms()) {
    for (int j = 1; j <= w.length(); ++j) out.add_term(w.without_position(j), (j % 2) ? coeff : Rational(-coeff));
  }
  return out;
}

Chain boundary_restricted(int letter, const Chain& c) {
  if (c.degree() == 0) throw std::invalid_argument("boundary of a degree-0 chain");
  Chain out(c.ambient(), c.degree() - 1);
  for (const auto& [w, coeff] : c.terms()) {
    const int j = w.position_of(letter);
    if (j) out.add_term(w.without_position(j), (j % 2) ? coeff : Rational(-coeff));
  }
  return out;
}

Chain word_chain(const GroupAlgebraElement& x, int n, std::span<const int> alphabet) {
  const int r = x.degree();
  if (static_cast<int>(alphabet.size()) != r) throw std::invalid_argument("alphabet size must equal the degree");
  Chain out(n, r);
  for (const auto& [pi, c] : x.terms()) {
    std::vector<int> letters(static_cast<std::size_t>(r));
    for (int p = 1; p <= r; ++p) letters[static_cast<std::size_t>(p - 1)] = alphabet[static_cast<std::size_t>(pi(p) - 1)];
    out.add_term(InjectiveWord(n, std::move(letters)), c);
  }
  return out;
}

}  // namespace injwords
