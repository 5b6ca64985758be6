#include "injwords/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "injwords/combinatorics.hpp"

namespace injwords {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int x : word_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation word");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<int> w(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      const int a = c[j];
      if (a < 1 || a > degree || used[static_cast<std::size_t>(a)]) {
        throw std::invalid_argument("cycles must be disjoint and within range");
      }
      used[static_cast<std::size_t>(a)] = true;
      w[static_cast<std::size_t>(a - 1)] = c[(j + 1) % c.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  const bool spaced = text.find_first_of(" ,") != std::string_view::npos;
  if (!spaced) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad permutation text");
      w.push_back(ch - '0');
    }
  } else {
    int cur = -1;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
      } else if (ch == ' ' || ch == ',') {
        if (cur >= 0) w.push_back(cur);
        cur = -1;
      } else {
        throw std::invalid_argument("bad permutation text");
      }
    }
    if (cur >= 0) w.push_back(cur);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

int Permutation::sign() const {
  // parity of n - (number of cycles)
  std::vector<bool> seen(word_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t j = i;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(word_[j] - 1);
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity ? -1 : 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
    if (word_[i] > word_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int Permutation::descent_count() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) d += word_[i] > word_[i + 1];
  return d;
}

int Permutation::fixed_point_count() const {
  int f = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) f += word_[i] == static_cast<int>(i) + 1;
  return f;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(word_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> c;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (degree() > 9 && i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) w[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation(std::move(w));
}

PermutationStatistics statistics(const Permutation& p) {
  return PermutationStatistics{p.sign(), p.descents(), p.cycle_type()};
}

std::uint64_t lex_rank(std::span<const int> word) {
  const std::size_t r = word.size();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;  // bitmask of letters already placed (degree <= 20)
  for (std::size_t i = 0; i < r; ++i) {
    const int x = word[i];
    const int smaller_unused = (x - 1) - __builtin_popcount(used & ((1u << (x - 1)) - 1u));
    rank = rank * (r - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << (x - 1);
  }
  return rank;
}

Permutation lex_unrank(int degree, std::uint64_t rank) {
  if (rank >= factorial(degree)) throw std::out_of_range("lex_unrank: rank out of range");
  std::vector<int> digits(static_cast<std::size_t>(degree));
  for (int i = degree - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(degree - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(degree));
  for (int d : digits) {
    w.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> w(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

GappedPermutation::GappedPermutation(int n, int missing, std::vector<int> word)
    : n_(n), missing_(missing), word_(std::move(word)) {
  if (missing < 1 || missing > n) throw std::invalid_argument("missing letter out of range");
  if (static_cast<int>(word_.size()) != n - 1) throw std::invalid_argument("gapped permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || x == missing || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("gapped permutation letters must be exactly {1..n} minus the gap");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation GappedPermutation::relabeled() const {
  std::vector<int> w(word_);
  for (int& x : w) {
    if (x > missing_) --x;
  }
  return Permutation(std::move(w));
}

int GappedPermutation::descent_count() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word_.size(); ++i) d += word_[i] > word_[i + 1];
  return d;
}

Permutation insert_letter(const GappedPermutation& sigma, int d) {
  if (d < 1 || d > sigma.n()) throw std::invalid_argument("insert position out of range");
  std::vector<int> w(sigma.word().begin(), sigma.word().end());
  w.insert(w.begin() + (d - 1), sigma.missing());
  return Permutation(std::move(w));
}

}  // namespace injwords
