#include "injwords/tableau.hpp"

#include <stdexcept>

#include "injwords/combinatorics.hpp"

namespace injwords {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lengths;
  for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
  return Partition(lengths);
}

}  // namespace

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : shape_(shape_of(rows)), rows_(std::move(rows)) {
  const int n = shape_.size();
  row_of_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) throw std::invalid_argument("tableau has an empty row");
    if (i > 0 && rows_[i].size() > rows_[i - 1].size()) throw std::invalid_argument("tableau rows must weakly decrease");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int x = rows_[i][j];
      if (x < 1 || x > n || row_of_[static_cast<std::size_t>(x)] != -1) {
        throw std::invalid_argument("tableau entries must be 1..n, each once");
      }
      row_of_[static_cast<std::size_t>(x)] = static_cast<int>(i);
      if (j > 0 && rows_[i][j - 1] >= x) throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && rows_[i - 1][j] >= x) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

std::vector<int> StandardTableau::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i) {
    if (row_of(i + 1) > row_of(i)) out.push_back(i);
  }
  return out;
}

std::optional<int> StandardTableau::smallest_descent(DescentConvention convention) const {
  for (int i = 1; i < size(); ++i) {
    if (row_of(i + 1) > row_of(i)) return i;
  }
  if (convention == DescentConvention::kTerminal && size() > 0) return size();
  return std::nullopt;
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += '/';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

namespace {

// Place entries 1..n one at a time at any outer corner of the partial shape.
void fill(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
          std::vector<StandardTableau>& out) {
  if (next > shape.size()) {
    out.emplace_back(rows);
    return;
  }
  for (int i = 0; i < shape.length(); ++i) {
    const auto len = static_cast<int>(rows[static_cast<std::size_t>(i)].size());
    if (len == shape.part(i)) continue;
    if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= len) continue;
    rows[static_cast<std::size_t>(i)].push_back(next);
    fill(shape, next + 1, rows, out);
    rows[static_cast<std::size_t>(i)].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
  std::vector<StandardTableau> out;
  if (shape.size() == 0) return out;
  fill(shape, 1, rows, out);
  return out;
}

std::uint64_t count_standard_tableaux(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::uint64_t hooks = 1;
  for (int i = 0; i < shape.length(); ++i) {
    for (int j = 0; j < shape.part(i); ++j) {
      const int arm = shape.part(i) - j - 1;
      const int leg = conj.part(j) - i - 1;
      hooks *= static_cast<std::uint64_t>(arm + leg + 1);
    }
  }
  return factorial(shape.size()) / hooks;
}

std::uint64_t count_even_smallest_descent(const Partition& shape, DescentConvention convention) {
  std::uint64_t count = 0;
  for (const auto& t : standard_tableaux(shape)) {
    const auto d = t.smallest_descent(convention);
    if (d && *d % 2 == 0) ++count;
  }
  return count;
}

}  // namespace injwords
