#include "injwords/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "injwords/characters.hpp"
#include "injwords/combinatorics.hpp"
#include "injwords/complex.hpp"
#include "injwords/eulerian.hpp"
#include "injwords/parallel.hpp"
#include "injwords/regular.hpp"
#include "injwords/shuffle.hpp"
#include "injwords/spectra.hpp"
#include "injwords/symmetric_group.hpp"
#include "injwords/words.hpp"

namespace injwords {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t count = 0;
  for (const auto& c : checks) count += c.passed ? 0 : 1;
  return count;
}

namespace {

// ---- independent oracles -------------------------------------------------

// census[k] = number of permutations of n with exactly k cycles and, when
// `derangements_only`, no fixed point. Brute force over S_n.
std::vector<std::uint64_t> cycle_census(int n, bool derangements_only) {
  std::vector<std::uint64_t> census(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : all_permutations(n)) {
    if (derangements_only && p.fixed_point_count() > 0) continue;
    census[p.cycles().size()] += 1;
  }
  return census;
}

std::uint64_t derangement_count(int n) {
  std::uint64_t total = 0;
  for (auto c : cycle_census(n, true)) total += c;
  return total;
}

// ---- formatting ----------------------------------------------------------

std::string param(const char* name, int value) { return std::string(name) + "=" + std::to_string(value); }

template <class... Rest>
std::string param(const char* name, int value, Rest... rest) {
  return param(name, value) + "," + param(rest...);
}

template <class T>
std::string list(const std::vector<T>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ']';
  return out.str();
}

std::string spectrum_string(const std::vector<SpectrumEntry>& spectrum) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    out << (i ? ", " : "") << spectrum[i].value << ':' << spectrum[i].multiplicity;
  }
  out << '}';
  return out.str();
}

CheckOutcome pass(std::string detail = "") { return CheckOutcome{true, std::move(detail), std::nullopt}; }
CheckOutcome fail(std::string witness) { return CheckOutcome{false, std::move(witness), std::nullopt}; }
CheckOutcome expect(bool ok, std::string detail) { return CheckOutcome{ok, std::move(detail), std::nullopt}; }

std::vector<Rational> chain_vector(const Chain& c) {
  std::vector<Rational> v(falling_factorial(c.ambient(), c.degree()));
  for (const auto& [w, coeff] : c.terms()) v[word_index(c.ambient(), w.letters())] = coeff;
  return v;
}

// λ_r^(k) for any k >= 1, dropping the l_r^(j) with j > r (which are empty).
GroupAlgebraElement lambda_extended(int r, int k) {
  GroupAlgebraElement out(r);
  for (int i = 0; i < k; ++i) {
    if (k - i > r) continue;
    const long sign = i % 2 ? -1 : 1;
    out += Rational(sign * static_cast<long>(binomial(r + i, i))) * first_eulerian_summand(r, k - i);
  }
  return out;
}

GroupAlgebraElement literal(int r, const std::vector<std::pair<const char*, Rational>>& terms) {
  GroupAlgebraElement x(r);
  for (const auto& [word, c] : terms) x.add_term(Permutation::parse(word), c);
  return x;
}

// ---- check groups --------------------------------------------------------

const char* kIdempotentAnchor = "Eulerian idempotents: complete family of orthogonal idempotents";

}  // namespace

std::vector<CheckSpec> idempotent_checks(int r_max) {
  std::vector<CheckSpec> checks;
  for (int r = 1; r <= r_max; ++r) {
    checks.push_back({"idempotents.orthogonality", kIdempotentAnchor, param("r", r), [r] {
                        const auto& e = eulerian_idempotents(r);
                        for (int j = 0; j < r; ++j) {
                          for (int l = 0; l < r; ++l) {
                            const auto prod = e[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(l)];
                            const bool ok = j == l ? prod == e[static_cast<std::size_t>(j)] : prod.is_zero();
                            if (!ok) return fail("e^(" + std::to_string(j + 1) + ")·e^(" + std::to_string(l + 1) + ") is wrong");
                          }
                        }
                        return pass(std::to_string(r * r) + " products");
                      }});
    checks.push_back({"idempotents.completeness", kIdempotentAnchor, param("r", r), [r] {
                        GroupAlgebraElement sum(r);
                        for (const auto& e : eulerian_idempotents(r)) sum += e;
                        return expect(sum == GroupAlgebraElement::identity(r), "sum of idempotents vs identity");
                      }});
    checks.push_back({"idempotents.reconstruction", "(-1)^{k-1} λ_r^(k) = Σ_j k^j e_r^(j)", param("r", r), [r] {
                        const auto& e = eulerian_idempotents(r);
                        for (int k = 1; k <= r; ++k) {
                          GroupAlgebraElement rhs(r);
                          Rational power = 1;
                          for (int j = 1; j <= r; ++j) {
                            power *= k;
                            rhs += power * e[static_cast<std::size_t>(j - 1)];
                          }
                          auto lhs = lambda_element(r, k);
                          if (k % 2 == 0) lhs *= Rational(-1);
                          if (lhs != rhs) return fail("reconstruction fails at k=" + std::to_string(k));
                        }
                        return pass();
                      }});
  }
  if (r_max >= 3) {
    checks.push_back({"idempotents.worked-example", "Eulerian idempotents of S_3 in closed form", param("r", 3), [] {
                        const auto e1 = literal(3, {{"123", Rational(1, 3)}, {"132", Rational(1, 6)}, {"213", Rational(1, 6)},
                                                    {"231", Rational(-1, 6)}, {"312", Rational(-1, 6)}, {"321", Rational(-1, 3)}});
                        const auto e2 = literal(3, {{"123", Rational(1, 2)}, {"321", Rational(1, 2)}});
                        const auto e3 = literal(3, {{"123", Rational(1, 6)}, {"132", Rational(-1, 6)}, {"213", Rational(-1, 6)},
                                                    {"231", Rational(1, 6)}, {"312", Rational(1, 6)}, {"321", Rational(-1, 6)}});
                        const auto& e = eulerian_idempotents(3);
                        return expect(e[0] == e1 && e[1] == e2 && e[2] == e3, "coefficient-for-coefficient comparison");
                      }});
  }
  return checks;
}

std::vector<CheckSpec> ideal_dimension_checks(int r_max) {
  std::vector<CheckSpec> checks;
  for (int r = 1; r <= r_max; ++r) {
    checks.push_back({"idempotents.ideal-dimension", "dim ℚS_r·e_r^(k) = c(r,k), the Stirling number of the first kind",
                      param("r", r), [r] {
                        const auto stirling = cycle_census(r, false);
                        const auto& e = eulerian_idempotents(r);
                        // Ranks of the right multiplications by a complete
                        // orthogonal family add up to r! over ℚ; a modular total
                        // of r! certifies each.
                        std::vector<std::size_t> ranks;
                        for (std::size_t attempt = 0; attempt < 4 && ranks.empty(); ++attempt) {
                          const auto p = modp::prime(attempt);
                          std::vector<std::size_t> rp;
                          std::size_t total = 0;
                          for (const auto& x : e) {
                            rp.push_back(modp::rank(right_multiplication_matrix(x, p)));
                            total += rp.back();
                          }
                          if (total == factorial(r)) ranks = rp;
                        }
                        if (ranks.empty()) {
                          for (const auto& x : e) ranks.push_back(rank(right_multiplication_matrix(x)));
                        }
                        for (int k = 1; k <= r; ++k) {
                          if (ranks[static_cast<std::size_t>(k - 1)] != stirling[static_cast<std::size_t>(k)]) {
                            return fail("k=" + std::to_string(k) + ": rank " + std::to_string(ranks[static_cast<std::size_t>(k - 1)]) +
                                        " vs c(r,k)=" + std::to_string(stirling[static_cast<std::size_t>(k)]));
                          }
                        }
                        return pass("dims " + list(ranks));
                      }});
  }
  return checks;
}

std::vector<CheckSpec> boundary_checks(int n_max) {
  std::vector<CheckSpec> checks;
  for (int n = 2; n <= n_max; ++n) {
    checks.push_back({"complex.boundary-squared", "∂_{r}∂_{r+1} = 0", param("n", n), [n] {
                        for (int r = 1; r < n; ++r) {
                          if (!(boundary_matrix(n, r) * boundary_matrix(n, r + 1)).is_zero()) {
                            return fail("∂∂ ≠ 0 at r=" + std::to_string(r));
                          }
                        }
                        return pass();
                      }});
  }
  return checks;
}

std::vector<CheckSpec> intertwining_checks(int n_max) {
  std::vector<CheckSpec> checks;
  if (n_max >= 3) {
    checks.push_back({"complex.worked-restricted-boundaries", "∂[2] applied to the Eulerian idempotents of S_3", param("n", 3), [] {
                        const std::vector<int> full{1, 2, 3};
                        const std::vector<int> rest{1, 3};
                        const auto& e3 = eulerian_idempotents(3);
                        const auto& e2 = eulerian_idempotents(2);
                        const bool a = boundary_restricted(2, word_chain(e3[0], 3, full)).is_zero();
                        const bool b = boundary_restricted(2, word_chain(e3[1], 3, full)) == Rational(-1) * word_chain(e2[0], 3, rest);
                        const bool c = boundary_restricted(2, word_chain(e3[2], 3, full)) == Rational(-1) * word_chain(e2[1], 3, rest);
                        return expect(a && b && c, std::string("e1→0:") + (a ? "ok" : "bad") + " e2→-e1:" + (b ? "ok" : "bad") +
                                                       " e3→-e2:" + (c ? "ok" : "bad"));
                      }});
  }
  for (int n = 2; n <= n_max; ++n) {
    checks.push_back({"complex.restricted-boundary-lambda", "∂[i]λ_n^(k) = (-1)^{i-1} k λ_{n-1}^(k)", param("n", n), [n] {
                        std::vector<int> full(static_cast<std::size_t>(n));
                        for (int a = 1; a <= n; ++a) full[static_cast<std::size_t>(a - 1)] = a;
                        for (int i = 1; i <= n; ++i) {
                          const auto d = restricted_boundary_matrix(n, n, i);
                          std::vector<int> rest;
                          for (int a = 1; a <= n; ++a) {
                            if (a != i) rest.push_back(a);
                          }
                          for (int k = 1; k <= n; ++k) {
                            const auto lhs = d * chain_vector(word_chain(lambda_element(n, k), n, full));
                            const long sign = (i - 1) % 2 ? -1 : 1;
                            const auto rhs = chain_vector(Rational(sign * k) * word_chain(lambda_extended(n - 1, k), n, rest));
                            if (lhs != rhs) return fail("i=" + std::to_string(i) + ", k=" + std::to_string(k));
                          }
                        }
                        return pass();
                      }});
    checks.push_back({"complex.restricted-boundary-idempotent", "∂[i]e_n^(k) = (-1)^{i-1} e_{n-1}^(k-1)", param("n", n), [n] {
                        std::vector<int> full(static_cast<std::size_t>(n));
                        for (int a = 1; a <= n; ++a) full[static_cast<std::size_t>(a - 1)] = a;
                        for (int i = 1; i <= n; ++i) {
                          const auto d = restricted_boundary_matrix(n, n, i);
                          std::vector<int> rest;
                          for (int a = 1; a <= n; ++a) {
                            if (a != i) rest.push_back(a);
                          }
                          for (int k = 1; k <= n; ++k) {
                            const auto lhs = d * chain_vector(word_chain(eulerian_idempotent(n, k), n, full));
                            std::vector<Rational> rhs(lhs.size());
                            if (k >= 2) {
                              const long sign = (i - 1) % 2 ? -1 : 1;
                              rhs = chain_vector(Rational(sign) * word_chain(eulerian_idempotent(n - 1, k - 1), n, rest));
                            }
                            if (lhs != rhs) return fail("i=" + std::to_string(i) + ", k=" + std::to_string(k));
                          }
                        }
                        return pass();
                      }});
  }
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    checks.push_back({"complex.intertwining-operator", "∂[i]∘e_r^(k) = e_{r-1}^(k-1)∘∂[i] as operators on M_r", param("n", n), [n] {
                        for (int r = 2; r <= n; ++r) {
                          std::vector<RationalMatrix> upper, lower;
                          for (int k = 1; k <= r; ++k) upper.push_back(hodge_projector(n, r, k));
                          for (int k = 1; k < r; ++k) lower.push_back(hodge_projector(n, r - 1, k));
                          for (int i = 1; i <= n; ++i) {
                            const auto d = restricted_boundary_matrix(n, r, i);
                            for (int k = 1; k <= r; ++k) {
                              const auto lhs = d * upper[static_cast<std::size_t>(k - 1)];
                              const bool ok = k == 1 ? lhs.is_zero() : lhs == lower[static_cast<std::size_t>(k - 2)] * d;
                              if (!ok) return fail(param("r", r, "i", i, "k", k));
                            }
                          }
                        }
                        return pass();
                      }});
    checks.push_back({"complex.hodge-splitting", "∂(M_r^(k)) ⊆ M_{r-1}^(k-1)", param("n", n), [n] {
                        for (int r = 2; r <= n; ++r) {
                          const auto d = boundary_matrix(n, r);
                          for (int k = 1; k <= r; ++k) {
                            const auto image = d * hodge_projector(n, r, k);
                            const bool ok = k == 1 ? image.is_zero() : hodge_projector(n, r - 1, k - 1) * image == image;
                            if (!ok) return fail(param("r", r, "k", k));
                          }
                        }
                        return pass();
                      }});
  }
  return checks;
}

std::vector<CheckSpec> insertion_lemma_checks(int n_max) {
  std::vector<CheckSpec> checks;
  for (int n = 2; n <= n_max; ++n) {
    checks.push_back({"symgroup.descent-increase",
                      "inserting i into σ with j descents: j+1 positions keep j descents, n-j-1 give j+1", param("n", n), [n] {
                        std::size_t cases = 0;
                        for (int i = 1; i <= n; ++i) {
                          for (const auto& base : all_permutations(n - 1)) {
                            std::vector<int> word;
                            for (int x : base.word()) word.push_back(x >= i ? x + 1 : x);
                            const GappedPermutation sigma(n, i, word);
                            const int j = sigma.descent_count();
                            int same = 0, more = 0;
                            for (int d = 1; d <= n; ++d) {
                              const int t = insert_letter(sigma, d).descent_count();
                              same += t == j;
                              more += t == j + 1;
                            }
                            if (same != j + 1 || more != n - j - 1) return fail("i=" + std::to_string(i) + ", σ=" + base.to_string());
                            ++cases;
                          }
                        }
                        return pass(std::to_string(cases) + " cases");
                      }});
    checks.push_back({"symgroup.sign-change", "sgn(σ with i inserted at position d) = (-1)^{i-d} sgn(σ)", param("n", n), [n] {
                        for (int i = 1; i <= n; ++i) {
                          for (const auto& base : all_permutations(n - 1)) {
                            std::vector<int> word;
                            for (int x : base.word()) word.push_back(x >= i ? x + 1 : x);
                            const GappedPermutation sigma(n, i, word);
                            for (int d = 1; d <= n; ++d) {
                              const int expected = ((i - d) % 2 ? -1 : 1) * sigma.sign();
                              if (insert_letter(sigma, d).sign() != expected) return fail(param("i", i, "d", d) + ", σ=" + base.to_string());
                            }
                          }
                        }
                        return pass();
                      }});
  }
  return checks;
}

std::vector<CheckSpec> homology_checks(int n_max) {
  std::vector<CheckSpec> checks;
  for (int n = 1; n <= n_max; ++n) {
    checks.push_back({"complex.homology", "H_r(M) = 0 for r < n and dim H_n(M) = D_n", param("n", n), [n] {
                        const auto dims = homology_dimensions(n);
                        std::vector<std::size_t> expected(static_cast<std::size_t>(n) + 1, 0);
                        expected.back() = derangement_count(n);
                        return expect(dims == expected, "dims " + list(dims) + (dims == expected ? "" : " expected " + list(expected)));
                      }});
  }
  return checks;
}

std::vector<CheckSpec> hodge_checks(int n_max) {
  std::vector<CheckSpec> checks;
  for (int n = 1; n <= n_max; ++n) {
    checks.push_back({"hodge.component-dimensions", "dim M_r^(k) = C(n,r)·c(r,k)", param("n", n), [n] {
                        for (int r = 1; r <= n; ++r) {
                          const auto dims = hodge_component_dimensions(n, r);
                          const auto stirling = cycle_census(r, false);
                          const auto& e = eulerian_idempotents(r);
                          for (int k = 1; k <= r; ++k) {
                            const auto expected = binomial(n, r) * stirling[static_cast<std::size_t>(k)];
                            // An idempotent's rank is its trace: dim M_r · (coefficient of id).
                            const Rational trace = Rational(static_cast<unsigned long>(falling_factorial(n, r))) *
                                                   e[static_cast<std::size_t>(k - 1)].coefficient(Permutation::identity(r));
                            const auto got = dims[static_cast<std::size_t>(k - 1)];
                            if (got != expected || trace != Rational(static_cast<unsigned long>(got))) {
                              return fail(param("r", r, "k", k) + ": rank " + std::to_string(got) + ", trace " + to_string(trace) +
                                          ", expected " + std::to_string(expected));
                            }
                          }
                        }
                        return pass();
                      }});
    checks.push_back({"hodge.homology", "dim H_n^(k)(M) = number of derangements with k cycles", param("n", n), [n] {
                        const auto table = hodge_homology_table(n);
                        const auto census = cycle_census(n, true);
                        std::vector<std::size_t> dims;
                        for (const auto& h : table) {
                          if (!h.agree()) {
                            return fail("k=" + std::to_string(h.k) + ": Euler characteristic " + std::to_string(h.euler_characteristic) +
                                        " vs Laplacian kernel " + std::to_string(h.laplacian_kernel));
                          }
                          if (h.laplacian_kernel != census[static_cast<std::size_t>(h.k)]) {
                            return fail("k=" + std::to_string(h.k) + ": " + std::to_string(h.laplacian_kernel) + " vs census " +
                                        std::to_string(census[static_cast<std::size_t>(h.k)]));
                          }
                          dims.push_back(h.laplacian_kernel);
                        }
                        return pass("dims by k " + list(dims));
                      }});
  }
  return checks;
}

std::vector<CheckSpec> shuffle_checks(int n_max, int sign_n_max) {
  std::vector<CheckSpec> checks;
  for (int r = 1; r <= n_max; ++r) {
    checks.push_back({"shuffle.random-to-random", "υ_r has total mass r², is inverse-closed, and Υ_r is its sign twist", param("r", r), [r] {
                        const auto u = random_to_random(r);
                        const auto s = signed_random_to_random(r);
                        const bool mass = u.coefficient_sum() == Rational(r * r);
                        const bool closed = u.antipode() == u && s.antipode() == s;
                        const bool twist = u.sign_twist() == s;
                        return expect(mass && closed && twist, std::string("mass:") + (mass ? "ok" : "bad") + " inverse-closed:" +
                                                                   (closed ? "ok" : "bad") + " twist:" + (twist ? "ok" : "bad"));
                      }});
  }
  for (int n = 1; n <= n_max; ++n) {
    checks.push_back({"shuffle.top-laplacian", "Λ_n equals Υ_n acting by positions", param("n", n), [n] {
                        return expect(laplacian(n, n) == position_action_matrix(signed_random_to_random(n), n), "entrywise");
                      }});
  }
  if (sign_n_max >= 1) {
    checks.push_back({"shuffle.laplacian-formula", "Λ_r = (r+1)(n-r)I + Υ_r + s·Σ_{a∈A,b∉A}(a,b) for one sign s",
                      param("n_max", sign_n_max), [sign_n_max] {
                        const auto res = resolve_cross_term_sign(sign_n_max);
                        std::size_t plus = 0, minus = 0;
                        for (const auto& p : res.probes) {
                          plus += p.plus_matches;
                          minus += p.minus_matches;
                        }
                        std::ostringstream detail;
                        detail << "probes " << res.probes.size() << ", s=+1 matches " << plus << ", s=-1 matches " << minus;
                        CheckOutcome out = expect(res.sign.has_value(), detail.str());
                        out.resolved_sign = res.sign;
                        return out;
                      }});
  }
  for (int n = 2; n <= n_max; ++n) {
    checks.push_back({"shuffle.cut-transpositions", "T(1,n) - T(1,r) - T(r+1,n) is the sum of the r(n-r) transpositions across the cut",
                      param("n", n), [n] {
                        for (int r = 1; r < n; ++r) {
                          const auto diff = transposition_sum(1, n, n) - transposition_sum(1, r, n) - transposition_sum(r + 1, n, n);
                          const auto cut = cut_transposition_sum(n, r);
                          if (diff != cut || cut.support_size() != static_cast<std::size_t>(r * (n - r))) return fail(param("r", r));
                        }
                        return pass();
                      }});
    checks.push_back({"shuffle.embedding", "value transpositions across A on M_r agree with position transpositions across the cut on the symmetrized words in M_n",
                      param("n", n), [n] {
                        for (int r = 1; r < n; ++r) {
                          const auto e = symmetrizing_embedding(n, r);
                          const auto lhs = position_action_matrix(cut_transposition_sum(n, r), n) * e;
                          if (lhs != e * value_transposition_matrix(n, r)) return fail(param("r", r));
                        }
                        return pass();
                      }});
  }
  for (int n = 2; n <= std::min(n_max, 5); ++n) {
    checks.push_back({"shuffle.omega-commutes", "Ω commutes with Υ_r acting by positions", param("n", n), [n] {
                        const int s = -1;
                        for (int r = 1; r <= n; ++r) {
                          const auto u = position_action_matrix(signed_random_to_random(r), n);
                          for (int sign : {s, -s}) {
                            if (!commutator(omega_matrix(n, r, sign), u).is_zero()) return fail(param("r", r, "s", sign));
                          }
                        }
                        return pass("both signs");
                      }});
  }
  return checks;
}

std::vector<CheckSpec> spectra_checks(const SpectraBounds& bounds) {
  std::vector<CheckSpec> checks;
  auto laplacian_check = [](int n, int r) {
    return CheckSpec{"spectra.laplacian", "Λ_r has integral spectrum; positive definite for r < n, kernel of dimension D_n at r = n",
                     param("n", n, "r", r), [n, r] {
                       const auto cert = integer_spectrum_certificate(laplacian(n, r), true);
                       const std::string spec = spectrum_string(cert.spectrum);
                       if (!cert.integral || !cert.trace_matches) return fail("not certified: " + spec);
                       const std::size_t kernel = !cert.spectrum.empty() && cert.spectrum.front().value == 0 ? cert.spectrum.front().multiplicity : 0;
                       const std::size_t expected = r == n ? derangement_count(n) : 0;
                       const bool nonneg = cert.spectrum.empty() || cert.spectrum.front().value >= 0;
                       return expect(nonneg && kernel == expected, spec);
                     }};
  };
  const int sign_n = std::min(bounds.n_max, 5);
  for (int n = 1; n <= bounds.n_max; ++n) {
    for (int r = 0; r <= n; ++r) checks.push_back(laplacian_check(n, r));
  }
  for (const auto& [n, r] : bounds.extra_laplacians) checks.push_back(laplacian_check(n, r));
  for (int n = 1; n <= bounds.n_max; ++n) {
    checks.push_back({"spectra.omega", "Ω has the spectrum predicted by contents of horizontal strips (with the resolved sign)",
                      param("n", n), [n, sign_n] {
                        const auto res = resolve_cross_term_sign(std::max(sign_n, std::min(n, 5)));
                        if (!res.sign) return fail("no uniform cross-term sign");
                        const int s = *res.sign;
                        std::string detail;
                        for (int r = 1; r <= n; ++r) {
                          const auto cert = integer_spectrum_certificate(omega_matrix(n, r, s), true);
                          const auto predicted = predicted_omega_spectrum(n, r, s);
                          if (!cert.integral || !cert.trace_matches || cert.spectrum != predicted) {
                            return fail("r=" + std::to_string(r) + ": certificate " + spectrum_string(cert.spectrum) + " predicted " +
                                        spectrum_string(predicted));
                          }
                          detail += (r > 1 ? " " : "") + std::string("r=") + std::to_string(r) + spectrum_string(predicted);
                        }
                        CheckOutcome out = pass(detail);
                        out.resolved_sign = s;
                        return out;
                      }});
    if (n >= 2) {
      checks.push_back({"spectra.omega-lower-bound",
                        "Ω eigenvalues are at least n-r > 0; the bound (r+1)(n-r)-r is reported separately",
                        param("n", n), [n, sign_n] {
                          const auto res = resolve_cross_term_sign(std::max(sign_n, std::min(n, 5)));
                          if (!res.sign) return fail("no uniform cross-term sign");
                          std::string detail;
                          for (int r = 1; r < n; ++r) {
                            const auto report = positivity_check(n, r, *res.sign);
                            if (!report.positive_definite) return fail("Λ_r not positive definite at r=" + std::to_string(r));
                            if (report.min_predicted_omega < n - r) {
                              return fail("r=" + std::to_string(r) + ": min ω " + std::to_string(report.min_predicted_omega));
                            }
                            if (!report.printed_bound_holds) {
                              detail += (detail.empty() ? "" : "; ") + std::string("r=") + std::to_string(r) + " min ω " +
                                        std::to_string(report.min_predicted_omega) + " < " + std::to_string(report.printed_bound);
                            }
                          }
                          return pass(detail.empty() ? "(r+1)(n-r)-r holds" : "(r+1)(n-r)-r violated: " + detail);
                        }});
    }
    checks.push_back({"spectra.signed-shuffle-on-words", "Υ_r on M_r is positive semidefinite with kernel dimension C(n,r)·D_r",
                      param("n", n), [n] {
                        std::string detail;
                        for (int r = 1; r <= n; ++r) {
                          const auto cert = integer_spectrum_certificate(position_action_matrix(signed_random_to_random(r), n), true);
                          if (!cert.integral || cert.spectrum.empty() || cert.spectrum.front().value < 0) {
                            return fail("r=" + std::to_string(r) + ": " + spectrum_string(cert.spectrum));
                          }
                          const std::size_t kernel = cert.spectrum.front().value == 0 ? cert.spectrum.front().multiplicity : 0;
                          if (kernel != binomial(n, r) * derangement_count(r)) return fail("r=" + std::to_string(r) + ": kernel " + std::to_string(kernel));
                        }
                        return pass();
                      }});
  }
  for (int r = 1; r <= bounds.regular_r_max; ++r) {
    checks.push_back({"spectra.regular-shuffles", "υ_r and Υ_r have the same integral spectrum", param("r", r), [r] {
                        const auto u = left_multiplication_matrix(random_to_random(r));
                        const auto s = left_multiplication_matrix(signed_random_to_random(r));
                        if (!u.is_symmetric() || !s.is_symmetric()) return fail("regular matrices not symmetric");
                        if (eigenvalue_search_bound(u) != r * r) return fail("search bound of υ_r is not r²");
                        const auto cu = integer_spectrum_certificate(u, true);
                        const auto cs = integer_spectrum_certificate(s, true);
                        if (!cu.integral || !cu.trace_matches) return fail("υ_r not certified: " + spectrum_string(cu.spectrum));
                        if (!cs.integral || !cs.trace_matches) return fail("Υ_r not certified: " + spectrum_string(cs.spectrum));
                        return expect(cu.spectrum == cs.spectrum, spectrum_string(cu.spectrum));
                      }});
  }
  return checks;
}

std::vector<CheckSpec> character_checks(int n_max, int ideal_n_max) {
  std::vector<CheckSpec> checks;
  const int small = std::min(n_max, 5);
  for (int n = 1; n <= small; ++n) {
    checks.push_back({"characters.psi", "Ψ_σ is a linear character of the centralizer, independent of base points", param("n", n), [n] {
                        const std::uint64_t L = lcm_up_to(n);
                        for (const auto& cls : conjugacy_classes(n)) {
                          const auto& sigma = cls.representative;
                          const auto z = centralizer_elements(sigma);
                          if (z.size() * cls.size != factorial(n) || z.size() != centralizer_order(cls.cycle_type)) {
                            return fail("centralizer order at " + cls.cycle_type.to_string());
                          }
                          // Base points moved one step along each cycle give the
                          // same values.
                          std::vector<std::uint64_t> shifted;
                          const auto cycles = sigma.cycles();
                          for (const auto& tau : z) {
                            std::uint64_t e = 0;
                            for (const auto& cycle : cycles) {
                              const auto l = static_cast<int>(cycle.size());
                              const int base = sigma(cycle[0]);
                              const int image = tau(base);
                              const auto& target = *std::find_if(cycles.begin(), cycles.end(), [&](const auto& c) {
                                return std::find(c.begin(), c.end(), image) != c.end();
                              });
                              const int target_base = sigma(target[0]);
                              int t = 0;
                              for (int x = target_base; x != image; x = sigma(x)) ++t;
                              e += static_cast<std::uint64_t>(t) * (L / static_cast<std::uint64_t>(l));
                            }
                            shifted.push_back(e % L);
                          }
                          for (std::size_t a = 0; a < z.size(); ++a) {
                            const auto ea = psi_exponent(sigma, z[a]);
                            if (ea != shifted[a]) return fail("base-point dependence at " + cls.cycle_type.to_string());
                            for (const auto& b : z) {
                              if (psi_exponent(sigma, z[a] * b) != (ea + psi_exponent(sigma, b)) % L) {
                                return fail("not multiplicative at " + cls.cycle_type.to_string());
                              }
                            }
                          }
                        }
                        return pass();
                      }});
    checks.push_back({"characters.induced", "χ_σ = Ind Ψ_σ has degree n!/|Z_σ| and Frobenius-reciprocal multiplicities",
                      param("n", n), [n] {
                        for (const auto& cls : conjugacy_classes(n)) {
                          const auto chi = induced_chi(cls.representative);
                          if (!chi.is_integral()) return fail("non-integral χ_σ at " + cls.cycle_type.to_string());
                          const auto degree = chi.degree_value().rational_value();
                          if (*degree != Rational(static_cast<unsigned long>(factorial(n) / centralizer_order(cls.cycle_type)))) {
                            return fail("degree at " + cls.cycle_type.to_string());
                          }
                          Rational norm = 0;
                          for (const auto& lambda : partitions(n)) {
                            const auto m = inner_product(chi, irreducible(lambda));
                            if (m != restricted_multiplicity(cls.representative, lambda)) {
                              return fail("reciprocity at σ=" + cls.cycle_type.to_string() + ", λ=" + lambda.to_string());
                            }
                            const auto q = m.rational_value();
                            if (!q || q->get_den() != 1 || *q < 0) return fail("multiplicity not a natural number");
                            norm += *q * *q;
                          }
                          if (norm < 1) return fail("⟨χ_σ, χ_σ⟩ < 1");
                        }
                        return pass();
                      }});
    checks.push_back({"characters.module", "χ(M_r^(k)) by traces, by explicit matrices, and χ(M_r) = Ind(Reg_r ⊗ trivial)",
                      param("n", n), [n] {
                        for (int r = 0; r <= n; ++r) {
                          const auto whole = module_character(n, r, std::nullopt);
                          if (whole != induced_word_character(n, r, false)) return fail("induced trivial twist at r=" + std::to_string(r));
                          if (whole.sign_twisted() != induced_word_character(n, r, true)) {
                            return fail("induced sign twist at r=" + std::to_string(r));
                          }
                          if (n <= 4 && whole != module_character_by_matrices(n, r, std::nullopt)) {
                            return fail("matrix trace at r=" + std::to_string(r));
                          }
                          if (r == 0) continue;
                          ClassFunction sum(n);
                          for (int k = 1; k <= r; ++k) {
                            const auto piece = module_character(n, r, k);
                            if (n <= 4 && piece != module_character_by_matrices(n, r, k)) {
                              return fail("matrix trace at " + param("r", r, "k", k));
                            }
                            sum += piece;
                          }
                          if (sum != whole) return fail("pieces do not add up at r=" + std::to_string(r));
                        }
                        return pass("Ind(Reg_r ⊗ sign) equals the sign twist");
                      }});
  }
  for (int n = 1; n <= n_max; ++n) {
    checks.push_back({"characters.hodge", "χ(H_n^(k)) by the Hopf trace equals the trace on ker Λ_n ∩ M_n^(k)", param("n", n), [n] {
                        const auto by_kernel = hodge_characters_by_kernel(n);
                        const auto census = cycle_census(n, true);
                        std::vector<std::int64_t> degrees;
                        for (int k = 1; k <= n; ++k) {
                          const auto hopf = hodge_character(n, k);
                          if (hopf != by_kernel[static_cast<std::size_t>(k - 1)]) return fail("routes differ at k=" + std::to_string(k));
                          if (!hopf.is_integral()) return fail("non-integral at k=" + std::to_string(k));
                          const auto degree = hopf.integer_values().back();
                          if (degree != static_cast<std::int64_t>(census[static_cast<std::size_t>(k)])) {
                            return fail("degree " + std::to_string(degree) + " at k=" + std::to_string(k));
                          }
                          degrees.push_back(degree);
                        }
                        return pass("degrees by k " + list(degrees));
                      }});
    checks.push_back({"characters.hodge-pieces", "sgn ⊗ H_n^(k)(M) = Σ χ_σ over derangement classes with k cycles", param("n", n), [n] {
                        for (int k = 1; k <= n; ++k) {
                          const auto cmp = verify_hodge_piece_theorem(n, k);
                          if (!cmp.equal) return fail("k=" + std::to_string(k) + " differs at class " + cmp.first_mismatch->to_string());
                          if (!cmp.integral) return fail("k=" + std::to_string(k) + " non-integral values");
                        }
                        return pass();
                      }});
    checks.push_back({"characters.tableaux", "multiplicity of S^λ in H_n(M) = #SYT of shape λ with even smallest descent",
                      param("n", n), [n] {
                        const auto check = verify_reiner_webb(n, DescentConvention::kTerminal);
                        std::ostringstream detail;
                        for (const auto& row : check.rows) {
                          if (row.multiplicity != static_cast<std::int64_t>(row.even_tableaux)) {
                            return fail(row.shape.to_string() + ": multiplicity " + std::to_string(row.multiplicity) + " vs tableaux " +
                                        std::to_string(row.even_tableaux));
                          }
                          if (row.multiplicity) detail << row.shape.to_string() << ':' << row.multiplicity << ' ';
                        }
                        if (check.dimension != static_cast<std::int64_t>(derangement_count(n))) {
                          return fail("Σ multiplicity·f_λ = " + std::to_string(check.dimension));
                        }
                        ClassFunction refined(n);
                        for (int k = 1; k <= n; ++k) refined += hodge_character(n, k);
                        if (refined != top_homology_character(n)) return fail("Hodge pieces do not add up to H_n");
                        const bool other = verify_reiner_webb(n, DescentConvention::kNone).holds;
                        detail << "(descent-free tableaux uncounted: " << (other ? "also holds" : "fails") << ')';
                        return pass(detail.str());
                      }});
  }
  for (int n = 1; n <= ideal_n_max; ++n) {
    checks.push_back({"characters.ideals", "sgn ⊗ ℚS_n e_n^(k) = Σ χ_σ over classes with k cycles", param("n", n), [n] {
                        const auto stirling = cycle_census(n, false);
                        for (int k = 1; k <= n; ++k) {
                          const auto cmp = verify_ideal_theorem(n, k);
                          if (!cmp.equal) return fail("k=" + std::to_string(k) + " differs at class " + cmp.first_mismatch->to_string());
                          const auto degree = cmp.lhs.integer_values().back();
                          if (degree != static_cast<std::int64_t>(stirling[static_cast<std::size_t>(k)])) {
                            return fail("dimension " + std::to_string(degree) + " at k=" + std::to_string(k));
                          }
                        }
                        return pass();
                      }});
  }
  for (int n = 1; n <= small; ++n) {
    checks.push_back({"characters.cycle-index", "class functions and cycle indices determine each other", param("n", n), [n] {
                        for (const auto& lambda : partitions(n)) {
                          const auto chi = irreducible(lambda);
                          if (from_cycle_index(n, cycle_index(chi)) != chi) return fail("round trip at " + lambda.to_string());
                        }
                        return pass();
                      }});
  }
  return checks;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "boundary", "idempotents", "hodge", "shuffle", "spectra", "characters"};
  return names;
}

std::vector<CheckSpec> suite_checks(const std::string& suite, int n_max) {
  auto append = [](std::vector<CheckSpec>& to, std::vector<CheckSpec> from) {
    for (auto& c : from) to.push_back(std::move(c));
  };
  std::vector<CheckSpec> checks;
  const bool all = suite == "all";
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  if (all || suite == "idempotents") {
    append(checks, idempotent_checks(n_max));
    append(checks, ideal_dimension_checks(std::min(n_max, 6)));
  }
  if (all || suite == "boundary") {
    append(checks, boundary_checks(n_max));
    append(checks, intertwining_checks(n_max));
    append(checks, insertion_lemma_checks(n_max));
    append(checks, homology_checks(n_max));
  }
  if (all || suite == "hodge") append(checks, hodge_checks(n_max));
  if (all || suite == "shuffle") append(checks, shuffle_checks(n_max, std::min(n_max, 5)));
  if (all || suite == "spectra") append(checks, spectra_checks(SpectraBounds{n_max, n_max, {}}));
  if (all || suite == "characters") append(checks, character_checks(n_max, std::min(n_max, 5)));
  return checks;
}

VerificationReport run_checks(const std::string& suite, int n_max, const std::vector<CheckSpec>& checks, std::size_t jobs) {
  VerificationReport report;
  report.suite = suite;
  report.n_max = n_max;
  report.checks.resize(checks.size());
  std::vector<std::optional<int>> signs(checks.size());
  parallel_for(checks.size(), jobs, [&](std::size_t i) {
    const auto& spec = checks[i];
    auto& rec = report.checks[i];
    rec.id = spec.id;
    rec.anchor = spec.anchor;
    rec.params = spec.params;
    const auto start = std::chrono::steady_clock::now();
    try {
      auto outcome = spec.run();
      rec.passed = outcome.passed;
      rec.detail = std::move(outcome.detail);
      signs[i] = outcome.resolved_sign;
    } catch (const std::exception& e) {
      rec.passed = false;
      rec.detail = std::string("exception: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  for (const auto& s : signs) {
    if (s) {
      report.resolved_sign = s;
      break;
    }
  }
  return report;
}

VerificationReport run_suite(const std::string& suite, int n_max, std::size_t jobs) {
  return run_checks(suite, n_max, suite_checks(suite, n_max), jobs);
}

}  // namespace injwords
