#include "injwords/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "injwords/combinatorics.hpp"

namespace injwords {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (p > 0) {
      parts_.push_back(p);
      size_ += p;
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::multiplicity(int part_length) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part_length));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 1; col <= part(0); ++col) {
    int height = 0;
    while (height < length() && part(height) >= col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

std::uint64_t centralizer_order(const Partition& cycle_type) {
  std::uint64_t out = 1;
  for (int l = 1; l <= cycle_type.size(); ++l) {
    const int m = cycle_type.multiplicity(l);
    for (int i = 0; i < m; ++i) out *= static_cast<std::uint64_t>(l);
    out *= factorial(m);
  }
  return out;
}

std::uint64_t class_size(const Partition& cycle_type) {
  return factorial(cycle_type.size()) / centralizer_order(cycle_type);
}

int class_sign(const Partition& cycle_type) {
  return (cycle_type.size() - cycle_type.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace injwords
