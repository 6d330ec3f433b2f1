// Command-line harness: property verification, counterexample reproduction,
// randomized bound search, and the FEM-style surrogate experiment.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ritzmaj/bounds.hpp"
#include "ritzmaj/errors.hpp"
#include "ritzmaj/harness.hpp"
#include "ritzmaj/mat.hpp"
#include "ritzmaj/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitProvenViolated = 1;
constexpr int kExitConjectureViolation = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RITZ_MAJORIZE_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 20101842;
}

ritzmaj::EmitFormat parse_format(const std::string& name) {
  if (name == "json") return ritzmaj::EmitFormat::json;
  if (name == "csv") return ritzmaj::EmitFormat::csv;
  throw CLI::ValidationError("--format must be json or csv");
}

int run_verify(int trials, std::uint64_t seed, double tol) {
  using namespace ritzmaj;
  int exit_code = kExitOk;

  std::printf("== proven bound suite (%d instances each) ==\n", trials);
  for (BoundId id : all_bound_ids()) {
    if (status_of(id) != BoundStatus::proven) continue;
    SearchResult r = search(id, trials, default_distribution(id), seed, tol);
    const bool ok = r.violations.empty();
    std::printf("%-24s %s (%d instances, %zu violations)\n", to_string(id).c_str(),
                ok ? "pass" : "FAIL", r.trials, r.violations.size());
    if (!ok) exit_code = kExitProvenViolated;
  }

  std::printf("== classical inequality suite (%d instances each) ==\n", trials);
  const ClassicalKind kinds[] = {ClassicalKind::lidskii,       ClassicalKind::gelfand_naimark,
                                 ClassicalKind::sv_product,    ClassicalKind::three_factor,
                                 ClassicalKind::pinching_weak, ClassicalKind::pinching_strong};
  for (ClassicalKind kind : kinds) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      Rng rng = Rng::stream(seed ^ 0xC1A551CA1ULL, static_cast<std::uint64_t>(t));
      const int n = 3 + static_cast<int>(rng.index(4));
      Mat a = Mat::gaussian(rng, n, n);
      Mat b = Mat::gaussian(rng, n, n);
      Mat c = Mat::gaussian(rng, n, n);
      MajorizationVerdict v;
      switch (kind) {
        case ClassicalKind::lidskii:
          v = check_classical(kind, std::vector<Mat>{a.symmetrized(), b.symmetrized()}, tol);
          break;
        case ClassicalKind::gelfand_naimark:
        case ClassicalKind::sv_product:
          v = check_classical(kind, std::vector<Mat>{a, b}, tol);
          break;
        case ClassicalKind::three_factor:
          v = check_classical(kind, std::vector<Mat>{a, b, c}, tol);
          break;
        case ClassicalKind::pinching_weak: {
          Mat a1 = Mat::gaussian(rng, n, 2), a2 = Mat::gaussian(rng, n, 2);
          Mat bb = Mat::gaussian(rng, n, n);
          Mat c1 = Mat::gaussian(rng, n, 2), c2 = Mat::gaussian(rng, n, 3);
          v = check_classical(kind, std::vector<Mat>{a1, a2, bb, c1, c2}, tol);
          break;
        }
        case ClassicalKind::pinching_strong: {
          Mat a1 = Mat::gaussian(rng, n, 2), a2 = Mat::gaussian(rng, n, 2);
          v = check_classical(kind, std::vector<Mat>{a1, a2, a.symmetrized()}, tol);
          break;
        }
      }
      if (!v.holds) ++failures;
    }
    std::printf("%-24s %s (%d instances, %d failures)\n", to_string(kind).c_str(),
                failures == 0 ? "pass" : "FAIL", trials, failures);
    if (failures > 0) exit_code = kExitProvenViolated;
  }
  return exit_code;
}

int run_repro(const std::string& which, double tol, const std::string& out,
              const std::string& format) {
  using namespace ritzmaj;
  std::vector<ReportRow> rows;
  const bool want1 = (which == "counterexample-1" || which == "all");
  const bool want2 = (which == "counterexample-2" || which == "all");
  if (!want1 && !want2) {
    std::fprintf(stderr, "unknown repro case: %s\n", which.c_str());
    return kExitProvenViolated;
  }
  if (want1)
    for (auto& r : repro(ReproCase::counterexample_1, tol)) rows.push_back(std::move(r));
  if (want2)
    for (auto& r : repro(ReproCase::counterexample_2, tol)) rows.push_back(std::move(r));

  bool as_expected = true;
  for (const ReportRow& row : rows) {
    const bool expect_holds = (row.report.id == BoundId::spread_sin2);
    std::printf("%-24s status=%-11s precondition_ok=%s holds=%s (expected %s)\n",
                to_string(row.report.id).c_str(), to_string(row.report.status).c_str(),
                row.report.precondition_ok ? "true" : "false", row.report.holds ? "true" : "false",
                expect_holds ? "true" : "false");
    if (row.report.holds != expect_holds || !row.report.precondition_ok) as_expected = false;
  }
  if (!out.empty()) emit(rows, parse_format(format), out);
  return as_expected ? kExitOk : kExitProvenViolated;
}

int run_search(const std::string& bound_name, int trials, std::uint64_t seed, double tol,
               int n_min, int n_max, const std::string& out, const std::string& format) {
  using namespace ritzmaj;
  BoundId id = bound_id_from_string(bound_name);
  SearchDistribution dist = default_distribution(id);
  if (n_min > 0) dist.n_min = n_min;
  if (n_max > 0) dist.n_max = std::max(n_max, dist.n_min);

  SearchResult r = search(id, trials, dist, seed, tol);
  std::printf("bound=%s status=%s trials=%d violations=%zu\n", to_string(id).c_str(),
              to_string(status_of(id)).c_str(), r.trials, r.violations.size());
  if (r.min_violation) {
    const InstanceSpec& s = r.min_violation->spec;
    std::printf("minimal witness: n=%d dim_x=%d dim_y=%d x=%s y=%s seed=%llu\n", s.n, s.dim_x,
                s.dim_y, to_string(s.x_kind).c_str(), to_string(s.y_kind).c_str(),
                static_cast<unsigned long long>(s.seed));
  }

  if (!out.empty()) {
    std::vector<ReportRow> rows;
    rows.reserve(r.violations.size());
    for (const Violation& v : r.violations)
      rows.push_back({v.report, {v.spec.seed, v.spec.n, v.spec.dim_x, v.spec.dim_y}});
    emit(rows, parse_format(format), out);
  }

  if (r.violations.empty()) {
    if (status_of(id) == BoundStatus::conjecture) std::printf("conjecture supported\n");
    return kExitOk;
  }
  return status_of(id) == BoundStatus::proven ? kExitProvenViolated : kExitConjectureViolation;
}

int run_fem_demo(double lambda1, double lambda2, double alpha, std::vector<double> h_grid,
                 const std::string& out, const std::string& format) {
  using namespace ritzmaj;
  std::vector<FemRow> rows = fem_demo(lambda1, lambda2, alpha, h_grid);
  std::printf("%-10s %-12s %-12s %-12s %-12s %-10s\n", "h", "trace_err", "maj_bound", "comp_bound",
              "ratio", "closed");
  bool ok = true;
  for (const FemRow& r : rows) {
    std::printf("%-10.3g %-12.5g %-12.5g %-12.5g %-12.8g %-10.8g\n", r.h, r.trace_error,
                r.trace_bound_maj, r.trace_bound_comp, r.ratio_maj_over_comp, r.ratio_closed_form);
    if (!r.trace_within_bound) ok = false;
  }
  if (!out.empty()) emit(rows, parse_format(format), out);
  return ok ? kExitOk : kExitProvenViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rayleigh-Ritz majorization bound checker"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  double tol = ritzmaj::kTolMaj;
  int trials = 1000;
  std::string out, format = "json";

  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--trials", trials, "instances per bound / kind");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--tol", tol, "relative tolerance");

  auto* rep = app.add_subcommand("repro", "reproduce the embedded counterexamples");
  std::string which = "all";
  rep->add_option("case", which, "counterexample-1 | counterexample-2 | all");
  rep->add_option("--tol", tol, "relative tolerance");
  rep->add_option("--out", out, "write reports to this path");
  rep->add_option("--format", format, "json | csv");

  auto* sea = app.add_subcommand("search", "randomized violation search for one bound");
  std::string bound_name;
  int n_min = 0, n_max = 0;
  sea->add_option("bound", bound_name, "bound id, e.g. conj-spread-sin")->required();
  sea->add_option("--trials", trials, "number of evaluated instances");
  sea->add_option("--seed", seed, "RNG seed");
  sea->add_option("--tol", tol, "relative tolerance");
  sea->add_option("--n-min", n_min, "smallest ambient dimension");
  sea->add_option("--n-max", n_max, "largest ambient dimension");
  sea->add_option("--out", out, "write violation reports to this path");
  sea->add_option("--format", format, "json | csv");

  auto* fem = app.add_subcommand("fem-demo", "synthetic FEM-style constant-improvement table");
  double lambda1 = 1.0, lambda2 = 1.0, alpha = 0.6;
  std::vector<double> h_grid{1e-1, 1e-2, 1e-3};
  fem->add_option("--lambda1", lambda1, "largest target eigenvalue");
  fem->add_option("--lambda2", lambda2, "second target eigenvalue");
  fem->add_option("--alpha", alpha, "approximation order in (0, 1]");
  fem->add_option("--h-grid", h_grid, "mesh sizes");
  fem->add_option("--out", out, "write the table to this path");
  fem->add_option("--format", format, "json | csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(trials, seed, tol);
    if (rep->parsed()) return run_repro(which, tol, out, format);
    if (sea->parsed()) return run_search(bound_name, trials, seed, tol, n_min, n_max, out, format);
    if (fem->parsed()) return run_fem_demo(lambda1, lambda2, alpha, h_grid, out, format);
  } catch (const ritzmaj::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitProvenViolated;
  }
  return kExitOk;
}
