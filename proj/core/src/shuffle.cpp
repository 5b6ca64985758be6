#include "injwords/shuffle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/words.hpp"

namespace injwords {

namespace {

GroupAlgebraElement shuffle_element(int r, bool signed_version) {
  if (r < 1) throw std::invalid_argument("shuffle element needs r >= 1");
  GroupAlgebraElement out = Rational(r) * GroupAlgebraElement::identity(r);
  for (int u = 1; u <= r; ++u) {
    for (int v = 1; v <= r; ++v) {
      if (u == v) continue;
      std::vector<int> cycle{v};
      const int step = u < v ? 1 : -1;
      for (int x = u; x != v; x += step) cycle.push_back(x);
      const int sign = signed_version && (std::abs(v - u) % 2) ? -1 : 1;
      out.add_term(Permutation::from_cycles(r, {cycle}), sign);
    }
  }
  return out;
}

Permutation transposition(int degree, int a, int b) { return Permutation::from_cycles(degree, {{a, b}}); }

}  // namespace

GroupAlgebraElement random_to_random(int r) { return shuffle_element(r, false); }

GroupAlgebraElement signed_random_to_random(int r) { return shuffle_element(r, true); }

GroupAlgebraElement transposition_sum(int u, int v, int degree) {
  if (u < 1 || u > v || v > degree) throw std::invalid_argument("transposition_sum needs 1 <= u <= v <= degree");
  GroupAlgebraElement out(degree);
  for (int a = u; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) out.add_term(transposition(degree, a, b), 1);
  }
  return out;
}

GroupAlgebraElement cut_transposition_sum(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("cut position out of range");
  GroupAlgebraElement out(n);
  for (int a = 1; a <= r; ++a) {
    for (int b = r + 1; b <= n; ++b) out.add_term(transposition(n, a, b), 1);
  }
  return out;
}

RationalMatrix value_transposition_matrix(int n, int r) {
  const auto words = basis(n, r);
  std::vector<Triplet> t;
  std::vector<int> swapped(static_cast<std::size_t>(r));
  for (std::size_t col = 0; col < words.size(); ++col) {
    const auto& w = words[col];
    for (int q = 1; q <= r; ++q) {
      for (int b = 1; b <= n; ++b) {
        if (w.contains(b)) continue;
        std::copy(w.letters().begin(), w.letters().end(), swapped.begin());
        swapped[static_cast<std::size_t>(q - 1)] = b;
        t.push_back(Triplet{word_index(n, swapped), col, Rational(1)});
      }
    }
  }
  return RationalMatrix::from_triplets(words.size(), words.size(), std::move(t));
}

RationalMatrix OperatorDescription::matrix() const {
  const std::size_t dim = falling_factorial(n, r);
  RationalMatrix out = scalar * RationalMatrix::identity(dim);
  if (!position_part.is_zero()) out += position_action_matrix(position_part, n);
  if (value_sign != 0) out += Rational(value_sign) * value_transposition_matrix(n, r);
  return out;
}

namespace {

void require_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("cross-term sign must be +1 or -1");
}

}  // namespace

OperatorDescription laplacian_description(int n, int r, int s) {
  require_sign(s);
  if (r < 1 || r > n) throw std::invalid_argument("laplacian formula needs 1 <= r <= n");
  return OperatorDescription{n, r, Rational((r + 1) * (n - r)), signed_random_to_random(r), s};
}

OperatorDescription omega_description(int n, int r, int s) {
  require_sign(s);
  if (r < 1 || r > n) throw std::invalid_argument("omega needs 1 <= r <= n");
  return OperatorDescription{n, r, Rational((r + 1) * (n - r)), GroupAlgebraElement(r), s};
}

RationalMatrix laplacian_by_formula(int n, int r, int s) { return laplacian_description(n, r, s).matrix(); }

RationalMatrix omega_matrix(int n, int r, int s) { return omega_description(n, r, s).matrix(); }

RationalMatrix symmetrizing_embedding(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("embedding needs 0 <= r <= n");
  const auto words = basis(n, r);
  const Rational weight(1, static_cast<unsigned long>(factorial(n - r)));
  std::vector<Triplet> t;
  for (std::size_t col = 0; col < words.size(); ++col) {
    std::vector<int> rest;
    for (int a = 1; a <= n; ++a) {
      if (!words[col].contains(a)) rest.push_back(a);
    }
    std::vector<int> full(words[col].letters().begin(), words[col].letters().end());
    full.resize(static_cast<std::size_t>(n));
    do {
      std::copy(rest.begin(), rest.end(), full.begin() + r);
      t.push_back(Triplet{word_index(n, full), col, weight});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return RationalMatrix::from_triplets(factorial(n), words.size(), std::move(t));
}

SignResolution resolve_cross_term_sign(int n_max) {
  SignResolution out;
  bool plus_uniform = true;
  bool minus_uniform = true;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto lap = laplacian(n, r);
      SignProbe probe{n, r, laplacian_by_formula(n, r, 1) == lap, laplacian_by_formula(n, r, -1) == lap};
      plus_uniform = plus_uniform && probe.plus_matches;
      minus_uniform = minus_uniform && probe.minus_matches;
      out.probes.push_back(probe);
    }
  }
  if (minus_uniform) {
    out.sign = -1;
  } else if (plus_uniform) {
    out.sign = 1;
  }
  return out;
}

}  // namespace injwords
