#include "injwords/sn_character.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace injwords {

namespace {

// λ is encoded by its beta-set {λ_i + (len - i)}; removing a rim hook of
// length l moves one bead from b to b - l, with sign (-1)^{beads strictly
// between}.
std::int64_t mn(std::vector<int> beads, const std::vector<int>& hooks, std::size_t next,
                std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (next == hooks.size()) return 1;
  auto key = std::make_pair(beads, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int l = hooks[next];
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int b = beads[i];
    const int target = b - l;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int x : beads) {
      if (x == target) occupied = true;
      if (x > target && x < b) ++between;
    }
    if (occupied) continue;
    auto moved = beads;
    moved[i] = target;
    const std::int64_t sub = mn(moved, hooks, next + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::int64_t irreducible_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("irreducible_character: size mismatch");
  std::vector<int> beads;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beads.push_back(lambda.part(i) + (len - 1 - i));
  std::vector<int> hooks(mu.parts().begin(), mu.parts().end());
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return mn(beads, hooks, 0, memo);
}

std::vector<std::vector<std::int64_t>> character_table(int n) {
  const auto parts = partitions(n);
  std::vector<std::vector<std::int64_t>> table;
  for (const auto& lambda : parts) {
    std::vector<std::int64_t> row;
    for (const auto& mu : parts) row.push_back(irreducible_character(lambda, mu));
    table.push_back(std::move(row));
  }
  return table;
}

}  // namespace injwords
