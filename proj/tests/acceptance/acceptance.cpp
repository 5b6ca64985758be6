// Acceptance run: one pass/fail line per criterion, nonzero exit if any fail.
// argv[1] is the injwords executable, used by the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "injwords/parallel.hpp"
#include "injwords/verify.hpp"

using namespace injwords;

namespace {

struct Outcome {
  bool passed = false;
  std::string summary;
};

Outcome run_group(const std::string& name, std::vector<CheckSpec> checks, bool need_sign = false) {
  const auto report = run_checks(name, 0, checks, default_jobs());
  Outcome out{report.passed(), std::to_string(report.checks.size() - report.failures()) + "/" +
                                   std::to_string(report.checks.size()) + " checks"};
  for (const auto& c : report.checks) {
    if (!c.passed) std::cerr << "  failed: " << c.id << " [" << c.params << "] " << c.detail << '\n';
  }
  if (need_sign) {
    if (report.resolved_sign) {
      out.summary += ", resolved cross-term sign " + std::to_string(*report.resolved_sign);
    } else {
      out.passed = false;
      out.summary += ", no uniform cross-term sign";
    }
  }
  return out;
}

template <class... Groups>
std::vector<CheckSpec> concat(Groups... groups) {
  std::vector<CheckSpec> all;
  (all.insert(all.end(), groups.begin(), groups.end()), ...);
  return all;
}

struct Captured {
  int status = -1;
  std::string output;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) c.output.append(buffer.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Outcome determinism(const std::string& cli) {
  const std::string command = "'" + cli + "' verify --n-max 4 --suite all --format json 2>/dev/null";
  const auto first = capture(command);
  const auto second = capture(command);
  const bool same = !first.output.empty() && first.output == second.output;
  Outcome out{same && first.status == 0 && second.status == 0,
              "exit codes " + std::to_string(first.status) + "/" + std::to_string(second.status) + ", " +
                  std::to_string(first.output.size()) + " bytes, " + (same ? "identical" : "DIFFERENT")};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to injwords>\n";
    return 2;
  }
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"Eulerian idempotents r<=7: orthogonal, complete, reconstruct lambda, r=3 closed form",
       [] { return run_group("idempotents", idempotent_checks(7)); }},
      {"restricted boundaries of lambda and e for n<=5, worked examples, insertion lemmas n<=7",
       [] { return run_group("boundary", concat(boundary_checks(5), intertwining_checks(5), insertion_lemma_checks(7))); }},
      {"homology n<=6 concentrated in the top degree with D_n; Hodge pieces by Euler characteristic and Laplacian kernel",
       [] { return run_group("homology", concat(homology_checks(6), hodge_checks(6))); }},
      {"top Laplacian equals signed random-to-random n<=6; one cross-term sign for all n<=5",
       [] { return run_group("shuffle", shuffle_checks(6, 5), true); }},
      {"integral certified spectra of Laplacians, Omega and shuffles; predicted Omega spectra; positivity",
       [] {
         return run_group("spectra", spectra_checks(SpectraBounds{5, 6, {{6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 6}}}));
       }},
      {"Hodge pieces n<=6 as sums of induced characters; ideals n<=5; tableau multiplicities n<=6",
       [] { return run_group("characters", concat(character_checks(6, 5), ideal_dimension_checks(6))); }},
      {"verify --n-max 4 --suite all is byte-identical across runs and exits 0", [cli = std::string(argv[1])] { return determinism(cli); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.passed;
    std::printf("criterion %zu: %s  %s (%s; %.1fs)\n", i + 1, out.passed ? "PASS" : "FAIL", criteria[i].name, out.summary.c_str(), seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
