#include "injwords/symmetric_group.hpp"

#include <array>
#include <memory>
#include <stdexcept>

namespace injwords {

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree), elements_(all_permutations(degree)) {
  inverses_.resize(elements_.size());
  signs_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    inverses_[i] = index_of(elements_[i].inverse());
    signs_[i] = elements_[i].sign();
  }
}

const SymmetricGroup& SymmetricGroup::of(int degree) {
  constexpr int kMaxDegree = 9;
  if (degree < 0 || degree > kMaxDegree) throw std::out_of_range("SymmetricGroup::of: degree out of range");
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxDegree + 1> cache;
  static std::array<std::once_flag, kMaxDegree + 1> once;
  const auto d = static_cast<std::size_t>(degree);
  std::call_once(once[d], [&] { cache[d] = std::make_unique<SymmetricGroup>(degree); });
  return *cache[d];
}

void SymmetricGroup::build_table() const {
  const std::size_t n = order();
  table_.resize(n * n);
  const auto r = static_cast<std::size_t>(degree_);
  std::vector<int> w(r);
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = elements_[a].word();
    for (std::size_t b = 0; b < n; ++b) {
      const auto pb = elements_[b].word();
      for (std::size_t x = 0; x < r; ++x) w[x] = pa[static_cast<std::size_t>(pb[x] - 1)];
      table_[a * n + b] = static_cast<std::uint16_t>(lex_rank(w));
    }
  }
}

std::size_t SymmetricGroup::compose_index(std::size_t a, std::size_t b) const {
  if (has_table()) {
    std::call_once(table_once_, [this] { build_table(); });
    return table_[a * order() + b];
  }
  return index_of(compose(elements_[a], elements_[b]));
}

Permutation class_representative(const Partition& cycle_type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : cycle_type.parts()) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(cycle_type.size(), cycles);
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  if (n < 0) throw std::invalid_argument("conjugacy_classes: negative degree");
  std::vector<ConjugacyClass> out;
  for (auto& p : partitions(n)) {
    out.push_back(ConjugacyClass{p, class_size(p), class_representative(p)});
  }
  return out;
}

std::vector<ConjugacyClass> derangement_classes(int n, int k) {
  std::vector<ConjugacyClass> out;
  for (auto& c : conjugacy_classes(n)) {
    if (c.cycle_type.multiplicity(1) == 0 && c.cycle_type.length() == k) out.push_back(c);
  }
  return out;
}

std::vector<ConjugacyClass> classes_with_cycle_count(int n, int k) {
  std::vector<ConjugacyClass> out;
  for (auto& c : conjugacy_classes(n)) {
    if (c.cycle_type.length() == k) out.push_back(c);
  }
  return out;
}

bool commutes(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

std::vector<Permutation> centralizer_elements(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (const auto& tau : SymmetricGroup::of(sigma.degree()).elements()) {
    if (commutes(tau, sigma)) out.push_back(tau);
  }
  return out;
}

}  // namespace injwords
