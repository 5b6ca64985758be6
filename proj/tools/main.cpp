// injwords: command-line front end for the injective-word complex library.
//
// Exit codes: 0 success, 1 verification failure or a non-integral spectrum,
// 2 usage error (bad flags or a size past the caps without --force).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
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
#include "injwords/verify.hpp"

using json = nlohmann::ordered_json;
using namespace injwords;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int r = -1;
  int k = 0;
  int n_max = 4;
  std::string op = "laplacian";
  std::string format = "table";
  std::string suite = "all";
  std::string export_matrix;
  std::size_t jobs = 0;
  bool force = false;
};

constexpr int kWordCap = 6;
constexpr int kIdempotentCap = 7;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_cap(const Options& o, int value, int cap, const char* what) {
  if (value > cap && !o.force) {
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds " + std::to_string(cap) + "; pass --force to run anyway");
  }
}

std::string value_string(const CyclotomicValue& v) {
  if (auto q = v.rational_value()) return to_string(*q);
  return v.to_string();
}

// Aligned plain-text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit(const Options& o, const json& j, const std::function<void()>& table) {
  if (o.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    table();
  }
}

// ---- idempotents ---------------------------------------------------------

int cmd_idempotents(const Options& o) {
  require(o.r >= 1, "--r must be at least 1");
  require_cap(o, o.r, kIdempotentCap, "r");
  const auto& e = eulerian_idempotents(o.r);
  json j{{"r", o.r}, {"idempotents", json::array()}, {"orthogonality", json::array()}};
  bool all_pass = true;
  for (int k = 1; k <= o.r; ++k) {
    json terms = json::array();
    for (const auto& t : serialize(e[static_cast<std::size_t>(k - 1)])) terms.push_back({t.word, t.numerator, t.denominator});
    j["idempotents"].push_back({{"k", k}, {"terms", terms}});
  }
  for (int a = 1; a <= o.r; ++a) {
    for (int b = 1; b <= o.r; ++b) {
      const auto prod = e[static_cast<std::size_t>(a - 1)] * e[static_cast<std::size_t>(b - 1)];
      const bool ok = a == b ? prod == e[static_cast<std::size_t>(a - 1)] : prod.is_zero();
      all_pass = all_pass && ok;
      j["orthogonality"].push_back({{"j", a}, {"k", b}, {"pass", ok}});
    }
  }
  emit(o, j, [&] {
    for (int k = 1; k <= o.r; ++k) {
      std::cout << "e_" << o.r << "^(" << k << ")\n";
      Table t({"  word", "coefficient"});
      for (const auto& term : serialize(e[static_cast<std::size_t>(k - 1)])) {
        t.add({"  " + term.word, term.denominator == "1" ? term.numerator : term.numerator + "/" + term.denominator});
      }
      t.print(std::cout);
    }
    std::cout << "orthogonality: " << (all_pass ? "pass" : "FAIL") << '\n';
  });
  return all_pass ? 0 : 1;
}

// ---- complex -------------------------------------------------------------

int cmd_complex(const Options& o) {
  require(o.n >= 1, "--n must be at least 1");
  require_cap(o, o.n, kWordCap, "n");
  if (!o.export_matrix.empty()) {
    require(o.r >= 0 && o.r <= o.n, "--export needs 0 <= --r <= --n");
    if (o.export_matrix == "boundary") {
      require(o.r >= 1, "the boundary starts in degree 1");
      write_triplets(std::cout, boundary_matrix(o.n, o.r));
    } else {
      write_triplets(std::cout, laplacian(o.n, o.r));
    }
    return 0;
  }
  const auto ranks = boundary_ranks(o.n);
  const auto homology = homology_dimensions(o.n);
  json j{{"n", o.n}, {"degrees", json::array()}};
  Table t({"r", "dim M_r", "rank d_r", "dim H_r"});
  for (int r = 0; r <= o.n; ++r) {
    const auto dim = falling_factorial(o.n, r);
    const auto rank = ranks[static_cast<std::size_t>(r)];
    const auto h = homology[static_cast<std::size_t>(r)];
    j["degrees"].push_back({{"r", r}, {"dimension", dim}, {"boundary_rank", rank}, {"homology", h}});
    t.add({std::to_string(r), std::to_string(dim), std::to_string(rank), std::to_string(h)});
  }
  emit(o, j, [&] { t.print(std::cout); });
  return 0;
}

// ---- hodge ---------------------------------------------------------------

int cmd_hodge(const Options& o) {
  require(o.n >= 1, "--n must be at least 1");
  require_cap(o, o.n, kWordCap, "n");
  const auto table = hodge_homology_table(o.n);
  json j{{"n", o.n}, {"pieces", json::array()}};
  Table t({"k", "dim H_n^(k)", "euler characteristic", "laplacian kernel", "status"});
  bool agree = true;
  for (const auto& h : table) {
    agree = agree && h.agree();
    j["pieces"].push_back({{"k", h.k}, {"dimension", h.laplacian_kernel}, {"euler_characteristic", h.euler_characteristic},
                           {"agree", h.agree()}});
    t.add({std::to_string(h.k), std::to_string(h.laplacian_kernel), std::to_string(h.euler_characteristic),
           std::to_string(h.laplacian_kernel), h.agree() ? "agree" : "DISAGREE"});
  }
  emit(o, j, [&] { t.print(std::cout); });
  return agree ? 0 : 1;
}

// ---- spectrum ------------------------------------------------------------

int cmd_spectrum(const Options& o) {
  const bool regular = o.op == "rtr" || o.op == "signed-rtr";
  RationalMatrix m;
  int sign = -1;
  if (regular) {
    require(o.r >= 1, "--r must be at least 1");
    require_cap(o, o.r, kWordCap, "r");
    m = left_multiplication_matrix(o.op == "rtr" ? random_to_random(o.r) : signed_random_to_random(o.r));
  } else {
    require(o.n >= 1, "--n must be at least 1");
    require(o.r >= (o.op == "omega" ? 1 : 0) && o.r <= o.n, o.op == "omega" ? "omega needs 1 <= --r <= --n" : "laplacian needs 0 <= --r <= --n");
    require_cap(o, o.n, kWordCap, "n");
    if (o.op == "omega") {
      const auto res = resolve_cross_term_sign(std::clamp(o.n, 2, 4));
      if (!res.sign) {
        std::cerr << "no cross-term sign is uniform\n";
        return 1;
      }
      sign = *res.sign;
      m = omega_matrix(o.n, o.r, sign);
    } else {
      m = laplacian(o.n, o.r);
    }
  }
  const auto cert = integer_spectrum_certificate(m, true);
  json spectrum = json::array();
  for (const auto& e : cert.spectrum) spectrum.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  json j{{"operator", o.op}, {"n", o.n}, {"r", o.r}, {"dimension", cert.dimension}, {"spectrum", spectrum},
         {"integral", cert.integral && cert.trace_matches}, {"resolved_sign", sign}};
  emit(o, j, [&] {
    std::cout << o.op << " n=" << o.n << " r=" << o.r << " dimension=" << cert.dimension << '\n';
    Table t({"value", "multiplicity"});
    for (const auto& e : cert.spectrum) t.add({std::to_string(e.value), std::to_string(e.multiplicity)});
    t.print(std::cout);
    if (!cert.integral) std::cout << "not integral: " << cert.residual_dimension << " dimensions unaccounted for\n";
  });
  return cert.integral && cert.trace_matches ? 0 : 1;
}

// ---- characters ----------------------------------------------------------

json character_json(const ClassFunction& chi) {
  json values = json::array();
  for (const auto& lambda : partitions(chi.degree())) {
    values.push_back({{"class", lambda.to_string()}, {"size", std::to_string(class_size(lambda))}, {"value", value_string(chi.value(lambda))}});
  }
  return values;
}

void print_character(const ClassFunction& chi) {
  Table t({"class", "size", "value"});
  for (const auto& lambda : partitions(chi.degree())) {
    t.add({lambda.to_string(), std::to_string(class_size(lambda)), value_string(chi.value(lambda))});
  }
  t.print(std::cout);
}

int cmd_characters(const Options& o) {
  require(o.n >= 1, "--n must be at least 1");
  require(o.k >= 0 && o.k <= o.n, "--k must lie in 1..n");
  require_cap(o, o.n, kWordCap, "n");
  std::vector<int> ks;
  if (o.k) {
    ks.push_back(o.k);
  } else {
    for (int k = 1; k <= o.n; ++k) ks.push_back(k);
  }
  bool ok = true;
  json j{{"n", o.n}, {"hodge_pieces", json::array()}};
  std::vector<ClassFunction> chars;
  std::vector<bool> theorem;
  for (int k : ks) {
    chars.push_back(hodge_character(o.n, k));
    const auto cmp = verify_hodge_piece_theorem(o.n, k);
    theorem.push_back(cmp.equal && cmp.integral);
    ok = ok && theorem.back();
    j["hodge_pieces"].push_back({{"k", k}, {"character", character_json(chars.back())}, {"derangement_sum_matches", theorem.back()}});
  }
  TableauCheck tableaux;
  if (!o.k) {
    tableaux = verify_reiner_webb(o.n);
    ok = ok && tableaux.holds;
    json rows = json::array();
    for (const auto& row : tableaux.rows) {
      rows.push_back({{"shape", row.shape.to_string()}, {"multiplicity", std::to_string(row.multiplicity)},
                      {"even_smallest_descent_tableaux", std::to_string(row.even_tableaux)}, {"tableaux", std::to_string(row.tableaux)}});
    }
    j["top_homology"] = {{"multiplicities", rows}, {"dimension", std::to_string(tableaux.dimension)}, {"tableau_count_matches", tableaux.holds}};
  }
  emit(o, j, [&] {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      std::cout << "H_" << o.n << "^(" << ks[i] << ")  derangement sum: " << (theorem[i] ? "matches" : "DIFFERS") << '\n';
      print_character(chars[i]);
    }
    if (!o.k) {
      std::cout << "H_" << o.n << " multiplicities vs tableaux with even smallest descent\n";
      Table t({"shape", "multiplicity", "even tableaux", "f"});
      for (const auto& row : tableaux.rows) {
        t.add({row.shape.to_string(), std::to_string(row.multiplicity), std::to_string(row.even_tableaux), std::to_string(row.tableaux)});
      }
      t.print(std::cout);
      std::cout << "dimension " << tableaux.dimension << (tableaux.holds ? "" : "  MISMATCH") << '\n';
    }
  });
  return ok ? 0 : 1;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const Options& o) {
  require(o.n_max >= 1, "--n-max must be at least 1");
  require(std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end(), "unknown --suite " + o.suite);
  require_cap(o, o.n_max, kWordCap, "n-max");
  const auto report = run_suite(o.suite, o.n_max, o.jobs ? o.jobs : default_jobs());
  for (const auto& c : report.checks) {
    std::cerr << std::fixed << std::setprecision(3) << c.seconds << "s  " << c.id << " " << c.params << '\n';
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  json j{{"suite", report.suite}, {"n_max", report.n_max},
         {"resolved_sign", report.resolved_sign ? json(*report.resolved_sign) : json(nullptr)},
         {"passed", report.passed()}, {"failures", report.failures()}, {"checks", checks}};
  emit(o, j, [&] {
    Table t({"status", "check", "params", "detail"});
    for (const auto& c : report.checks) t.add({c.passed ? "pass" : "FAIL", c.id, c.params, c.detail});
    t.print(std::cout);
    std::cout << "suite " << report.suite << " n_max=" << report.n_max;
    if (report.resolved_sign) std::cout << " resolved_sign=" << *report.resolved_sign;
    std::cout << ": " << report.checks.size() - report.failures() << "/" << report.checks.size() << " passed\n";
  });
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the complex of injective words"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"table", "json"};
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats)); };
  auto add_force = [&](CLI::App* sub) { sub->add_flag("--force", o.force, "Run past the size caps"); };

  auto* idem = app.add_subcommand("idempotents", "Eulerian idempotents of S_r and their orthogonality table");
  idem->add_option("--r", o.r, "Degree")->required();
  add_format(idem);
  add_force(idem);

  auto* cx = app.add_subcommand("complex", "Chain groups, boundary ranks and homology of M(n)");
  cx->add_option("--n", o.n, "Alphabet size")->required();
  cx->add_option("--r", o.r, "Degree for --export");
  cx->add_option("--export", o.export_matrix, "Write a matrix as triplets instead")->check(CLI::IsMember({"boundary", "laplacian"}));
  add_format(cx);
  add_force(cx);

  auto* hodge = app.add_subcommand("hodge", "Dimensions of the Hodge pieces of the top homology");
  hodge->add_option("--n", o.n, "Alphabet size")->required();
  add_format(hodge);
  add_force(hodge);

  auto* spec = app.add_subcommand("spectrum", "Certified integer spectrum of an operator");
  spec->add_option("--n", o.n, "Alphabet size (laplacian, omega)");
  spec->add_option("--r", o.r, "Degree")->required();
  spec->add_option("--operator", o.op, "laplacian, rtr, signed-rtr or omega")
      ->check(CLI::IsMember({"laplacian", "rtr", "signed-rtr", "omega"}));
  add_format(spec);
  add_force(spec);

  auto* ch = app.add_subcommand("characters", "Characters of the Hodge pieces and the tableau multiplicities");
  ch->add_option("--n", o.n, "Alphabet size")->required();
  ch->add_option("--k", o.k, "Single Hodge piece");
  add_format(ch);
  add_force(ch);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--n-max", o.n_max, "Largest n checked");
  ver->add_option("--suite", o.suite, "all, boundary, idempotents, hodge, shuffle, spectra or characters");
  ver->add_option("--jobs", o.jobs, "Worker threads (default: INJWORDS_JOBS or the core count)");
  add_format(ver);
  add_force(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*idem) return cmd_idempotents(o);
    if (*cx) return cmd_complex(o);
    if (*hodge) return cmd_hodge(o);
    if (*spec) return cmd_spectrum(o);
    if (*ch) return cmd_characters(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
