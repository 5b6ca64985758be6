#include "injwords/characters.hpp"

#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/eulerian.hpp"
#include "injwords/modular.hpp"
#include "injwords/sn_character.hpp"
#include "injwords/spectra.hpp"
#include "injwords/symmetric_group.hpp"
#include "injwords/words.hpp"

namespace injwords {

namespace {

// Cycle data of σ: for each point, its cycle's base point (the smallest
// element), the cycle length, and the offset t with σ^t(base) = point.
struct CycleData {
  std::vector<int> base;
  std::vector<int> length;
  std::vector<int> offset;
};

CycleData cycle_data(const Permutation& sigma) {
  const int n = sigma.degree();
  CycleData d{std::vector<int>(static_cast<std::size_t>(n) + 1), std::vector<int>(static_cast<std::size_t>(n) + 1),
              std::vector<int>(static_cast<std::size_t>(n) + 1)};
  for (const auto& cycle : sigma.cycles()) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const auto x = static_cast<std::size_t>(cycle[t]);
      d.base[x] = cycle[0];
      d.length[x] = static_cast<int>(cycle.size());
      d.offset[x] = static_cast<int>(t);
    }
  }
  return d;
}

std::uint64_t psi_exponent_with(const CycleData& d, const Permutation& tau, std::uint64_t conductor) {
  std::uint64_t e = 0;
  const int n = tau.degree();
  for (int x = 1; x <= n; ++x) {
    if (d.base[static_cast<std::size_t>(x)] != x) continue;
    const auto l = static_cast<std::uint64_t>(d.length[static_cast<std::size_t>(x)]);
    const auto t = static_cast<std::uint64_t>(d.offset[static_cast<std::size_t>(tau(x))]);
    e += t * (conductor / l);
  }
  return e % conductor;
}

ClassFunction rational_class_function(int n, const std::vector<Rational>& values) {
  ClassFunction f(n);
  const auto classes = partitions(n);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    f.set(classes[i], CyclotomicValue::from_rational(values[i], f.conductor()));
  }
  return f;
}

// Coefficient of the permutation with the given one-line word.
Rational coefficient_of(const GroupAlgebraElement& x, std::span<const int> word) {
  auto it = x.ranked_terms().find(lex_rank(word));
  return it == x.ranked_terms().end() ? Rational(0) : it->second;
}

}  // namespace

std::uint64_t psi_exponent(const Permutation& sigma, const Permutation& tau) {
  if (!commutes(sigma, tau)) throw std::invalid_argument("Ψ_σ is only defined on the centralizer of σ");
  return psi_exponent_with(cycle_data(sigma), tau, lcm_up_to(sigma.degree()));
}

CyclotomicValue psi_value(const Permutation& sigma, const Permutation& tau) {
  const std::uint64_t L = lcm_up_to(sigma.degree());
  return CyclotomicValue::root_of_unity(static_cast<std::int64_t>(psi_exponent(sigma, tau)), L, L);
}

ClassFunction induced_chi(const Permutation& sigma) {
  const int n = sigma.degree();
  const auto& group = SymmetricGroup::of(n);
  const std::uint64_t L = lcm_up_to(n);
  const auto data = cycle_data(sigma);
  std::vector<bool> in_centralizer(group.order(), false);
  std::size_t z_order = 0;
  for (const auto& tau : centralizer_elements(sigma)) {
    in_centralizer[group.index_of(tau)] = true;
    ++z_order;
  }
  ClassFunction chi(n);
  for (const auto& cls : conjugacy_classes(n)) {
    const std::size_t g = group.index_of(cls.representative);
    std::vector<Integer> counts(L, Integer(0));
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t y = group.compose_index(group.compose_index(x, g), group.inverse_index(x));
      if (!in_centralizer[y]) continue;
      counts[psi_exponent_with(data, group.element(y), L)] += 1;
    }
    auto value = CyclotomicValue::from_exponent_counts(counts, L);
    value *= Rational(1, static_cast<unsigned long>(z_order));
    chi.set(cls.cycle_type, std::move(value));
  }
  return chi;
}

CyclotomicValue restricted_multiplicity(const Permutation& sigma, const Partition& lambda) {
  const int n = sigma.degree();
  const std::uint64_t L = lcm_up_to(n);
  const auto data = cycle_data(sigma);
  const auto z = centralizer_elements(sigma);
  std::vector<Integer> counts(L, Integer(0));
  for (const auto& tau : z) {
    counts[psi_exponent_with(data, tau, L)] += irreducible_character(lambda, tau.cycle_type());
  }
  auto value = CyclotomicValue::from_exponent_counts(counts, L);
  value *= Rational(1, static_cast<unsigned long>(z.size()));
  return value;
}

ClassFunction module_character(int n, int r, std::optional<int> k) {
  if (r < 0 || r > n) throw std::invalid_argument("module character needs 0 <= r <= n");
  const auto classes = conjugacy_classes(n);
  std::vector<Rational> values;
  if (r == 0 || !k) {
    for (const auto& cls : classes) {
      values.emplace_back(static_cast<unsigned long>(falling_factorial(cls.representative.fixed_point_count(), r)));
    }
    return rational_class_function(n, values);
  }
  const auto& e = eulerian_idempotent(r, *k);
  const auto words = basis(n, r);
  std::vector<int> pi(static_cast<std::size_t>(r));
  for (const auto& cls : classes) {
    const Permutation g_inv = cls.representative.inverse();
    Rational trace = 0;
    for (const auto& w : words) {
      // Diagonal entry at w of (renaming by g)∘A(e): the coefficient of the
      // π with w∘π = g⁻¹∘w, if g⁻¹ maps the letters of w among themselves.
      bool closed = true;
      for (int q = 1; q <= r && closed; ++q) {
        const int pos = w.position_of(g_inv(w.letter(q)));
        closed = pos != 0;
        pi[static_cast<std::size_t>(q - 1)] = pos;
      }
      if (closed) trace += coefficient_of(e, pi);
    }
    values.push_back(trace);
  }
  return rational_class_function(n, values);
}

ClassFunction module_character_by_matrices(int n, int r, std::optional<int> k) {
  const std::size_t dim = falling_factorial(n, r);
  const RationalMatrix projector = (k && r > 0) ? hodge_projector(n, r, *k) : RationalMatrix::identity(dim);
  std::vector<Rational> values;
  for (const auto& cls : conjugacy_classes(n)) values.push_back((value_action_matrix(cls.representative, r) * projector).trace());
  return rational_class_function(n, values);
}

ClassFunction induced_word_character(int n, int r, bool sign_on_complement) {
  if (r < 0 || r > n) throw std::invalid_argument("induced character needs 0 <= r <= n");
  // Ind_H^G φ(g) = (1/|H|) Σ_{x ∈ S_n, xgx⁻¹ ∈ H} φ(xgx⁻¹), H = S_r × S_{n-r}
  // with S_r on {1..r}; Reg_r vanishes off the identity of S_r.
  const auto& group = SymmetricGroup::of(n);
  const Rational h_order(static_cast<unsigned long>(factorial(r) * factorial(n - r)));
  std::vector<Rational> values;
  for (const auto& cls : conjugacy_classes(n)) {
    const std::size_t g = group.index_of(cls.representative);
    Integer sum = 0;
    for (std::size_t x = 0; x < group.order(); ++x) {
      const auto& y = group.element(group.compose_index(group.compose_index(x, g), group.inverse_index(x)));
      bool fixes_head = true;
      for (int a = 1; a <= r && fixes_head; ++a) fixes_head = y(a) == a;
      if (!fixes_head) continue;
      const long theta = sign_on_complement ? y.sign() : 1;
      sum += static_cast<long>(factorial(r)) * theta;
    }
    values.push_back(Rational(sum) / h_order);
  }
  return rational_class_function(n, values);
}

ClassFunction hodge_character(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("Hodge index out of range");
  ClassFunction total(n);
  for (int r = n; r >= 0; --r) {
    const int j = k - (n - r);
    if (j < 0) break;
    ClassFunction piece(n);
    if (r == 0) {
      piece = module_character(n, 0, std::nullopt);  // M_0 is the j = 0 piece
    } else if (j >= 1 && j <= r) {
      piece = module_character(n, r, j);
    } else {
      continue;
    }
    if ((n - r) % 2) {
      total -= piece;
    } else {
      total += piece;
    }
  }
  return total;
}

std::vector<ClassFunction> hodge_characters_by_kernel(int n) {
  if (n < 1) throw std::invalid_argument("kernel characters need n >= 1");
  // ker Λ_n is preserved by each projector P_k (∂ intertwines the Hodge
  // projectors), and Π_0 = Π_{c ≠ 0} (Λ_n - c)/(-c) projects onto ker Λ_n
  // commuting with S_n. So χ_k(g) = tr(g P_k Π_0), an integer of absolute
  // value at most dim M_n; its residue modulo a prime above 2·dim fixes it.
  const auto lap = laplacian(n, n);
  const auto cert = integer_spectrum_certificate(lap, true);
  if (!cert.integral) throw std::runtime_error("Laplacian spectrum is not integral; kernel projector unavailable");
  const std::size_t dim = lap.rows();
  const auto words = basis(n, n);
  const auto classes = conjugacy_classes(n);
  // renamed[c][i]: index of the word g·w_i for the class representative g.
  std::vector<std::vector<std::size_t>> renamed(classes.size(), std::vector<std::size_t>(dim));
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (int q = 0; q < n; ++q) letters[static_cast<std::size_t>(q)] = classes[c].representative(words[i].letters()[static_cast<std::size_t>(q)]);
      renamed[c][i] = word_index(n, letters);
    }
  }
  for (std::size_t attempt = 0; attempt < 4; ++attempt) {
    const modp::Residue p = modp::prime(attempt);
    const modp::Reducer mod(p);
    try {
      auto kernel_projector = modp::DenseMatrix::identity(dim, p);
      for (const auto& [c, mult] : cert.spectrum) {
        if (c == 0) continue;
        const Rational scale = Rational(-1) / Rational(static_cast<long>(c));
        const auto factor = modp::reduce_sparse(scale * shifted(lap, Rational(static_cast<long>(c))), p);
        kernel_projector = modp::multiply(factor, kernel_projector);
      }
      std::vector<ClassFunction> out;
      for (int k = 1; k <= n; ++k) {
        const auto projector = position_action_matrix(eulerian_idempotent(n, k), n, p);
        std::vector<Rational> values;
        for (std::size_t c = 0; c < classes.size(); ++c) {
          // tr(P Π_0 G) = Σ_{i,j} P[i][j] Π_0[j][g·i], G the renaming matrix.
          modp::Residue trace = 0;
          for (std::size_t i = 0; i < dim; ++i) {
            const std::size_t gi = renamed[c][i];
            const modp::Residue* prow = projector.row_data(i);
            for (std::size_t j = 0; j < dim; ++j) {
              if (prow[j]) trace = mod(trace + prow[j] * kernel_projector.at(j, gi));
            }
          }
          values.emplace_back(static_cast<long>(modp::symmetric_lift(trace, p)));
        }
        out.push_back(rational_class_function(n, values));
      }
      return out;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  throw std::runtime_error("no usable prime for the kernel characters");
}

ClassFunction hodge_character_by_kernel(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("Hodge index out of range");
  return hodge_characters_by_kernel(n)[static_cast<std::size_t>(k - 1)];
}

ClassFunction top_homology_character(int n) {
  ClassFunction total(n);
  for (int r = n; r >= 0; --r) {
    const auto piece = module_character(n, r, std::nullopt);
    if ((n - r) % 2) {
      total -= piece;
    } else {
      total += piece;
    }
  }
  return total;
}

ClassFunction ideal_character(int n, int k) {
  const auto& e = eulerian_idempotent(n, k);
  const auto& group = SymmetricGroup::of(n);
  std::vector<Rational> values;
  for (const auto& cls : conjugacy_classes(n)) {
    // tr(h ↦ g·h·e) = Σ_h coefficient of h in g h e = Σ_h e(h⁻¹ g⁻¹ h).
    const std::size_t g_inv = group.inverse_index(group.index_of(cls.representative));
    Rational trace = 0;
    for (std::size_t h = 0; h < group.order(); ++h) {
      const std::size_t y = group.compose_index(group.compose_index(group.inverse_index(h), g_inv), h);
      auto it = e.ranked_terms().find(y);
      if (it != e.ranked_terms().end()) trace += it->second;
    }
    values.push_back(trace);
  }
  return rational_class_function(n, values);
}

namespace {

CharacterComparison compare(ClassFunction lhs, ClassFunction rhs) {
  CharacterComparison out{std::move(lhs), std::move(rhs), false, false, std::nullopt};
  out.equal = out.lhs == out.rhs;
  out.integral = out.lhs.is_integral() && out.rhs.is_integral();
  if (!out.equal) {
    for (std::size_t i = 0; i < out.lhs.classes().size(); ++i) {
      if (out.lhs.values()[i] != out.rhs.values()[i]) {
        out.first_mismatch = out.lhs.classes()[i];
        break;
      }
    }
  }
  return out;
}

ClassFunction sum_of_induced(int n, const std::vector<ConjugacyClass>& classes) {
  ClassFunction total(n);
  for (const auto& cls : classes) total += induced_chi(cls.representative);
  return total;
}

}  // namespace

CharacterComparison verify_hodge_piece_theorem(int n, int k) {
  return compare(hodge_character(n, k).sign_twisted(), sum_of_induced(n, derangement_classes(n, k)));
}

CharacterComparison verify_ideal_theorem(int n, int k) {
  return compare(ideal_character(n, k).sign_twisted(), sum_of_induced(n, classes_with_cycle_count(n, k)));
}

TableauCheck verify_reiner_webb(int n, DescentConvention convention) {
  TableauCheck check;
  check.holds = true;
  const auto chi = top_homology_character(n);
  for (const auto& lambda : partitions(n)) {
    TableauMultiplicity row;
    row.shape = lambda;
    const auto m = inner_product(chi, irreducible(lambda)).rational_value();
    if (!m || m->get_den() != 1) throw std::logic_error("multiplicity is not an integer");
    row.multiplicity = m->get_num().get_si();
    row.even_tableaux = count_even_smallest_descent(lambda, convention);
    row.tableaux = count_standard_tableaux(lambda);
    check.dimension += row.multiplicity * static_cast<std::int64_t>(row.tableaux);
    check.holds = check.holds && row.multiplicity == static_cast<std::int64_t>(row.even_tableaux);
    check.rows.push_back(std::move(row));
  }
  return check;
}

}  // namespace injwords
