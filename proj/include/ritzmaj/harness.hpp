#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ritzmaj/bounds.hpp"
#include "ritzmaj/mat.hpp"
#include "ritzmaj/subspaces.hpp"

namespace ritzmaj {

enum class XKind { contiguous_top, contiguous_bottom, invariant_random, arbitrary };
enum class YKind { perturb, planted_angles, random_subspace };

std::string to_string(XKind k);
std::string to_string(YKind k);

/// Recipe for one generated (A, X, Y) triple; generation is a pure function
/// of the spec (including its seed).
struct InstanceSpec {
  int n = 4;
  int dim_x = 2;
  int dim_y = 2;
  std::vector<double> spectrum;  // decreasing, length n
  XKind x_kind = XKind::contiguous_top;
  YKind y_kind = YKind::random_subspace;
  double perturb_eps = 0.25;            // for YKind::perturb
  std::vector<double> planted_angles;   // decreasing, for YKind::planted_angles
  std::uint64_t seed = 0;
};

struct Instance {
  Mat a;
  Subspace x;
  Subspace y;
};

Instance generate(const InstanceSpec& spec);

struct RowInstanceInfo {
  std::uint64_t seed = 0;
  int n = 0;
  int dim_x = 0;
  int dim_y = 0;
};

struct ReportRow {
  BoundReport report;
  RowInstanceInfo instance;
};

enum class ReproCase { counterexample_1, counterexample_2 };

/// Two hard-coded reference instances. counterexample-1 evaluates
/// spread-sin2 (holds) and conj-spread-sin-divided (fails);
/// counterexample-2 evaluates rel-sinA2-maj (fails).
std::vector<ReportRow> repro(ReproCase c, double tol = kTolMaj);

struct SearchDistribution {
  int n_min = 4;
  int n_max = 12;
  bool equal_dims = true;
  bool positive_spectrum = false;  // spectra in (0, ~2] for PD-requiring bounds
  bool inject_gap = false;         // widen the gap after index dim_x
  std::vector<XKind> x_kinds;
  std::vector<YKind> y_kinds;
  double max_perturb = 0.5;
  double max_planted_angle = 1.35;
};

SearchDistribution default_distribution(BoundId id);

struct Violation {
  InstanceSpec spec;
  BoundReport report;
};

struct SearchResult {
  BoundId id{};
  int trials = 0;  // instances evaluated with satisfied preconditions
  std::vector<Violation> violations;
  std::optional<Violation> min_violation;  // smallest shrunk witness
};

/// Evaluates the bound on `trials` generated instances whose preconditions
/// hold (resampling otherwise), records violations, and shrinks each one.
/// Deterministic given (distribution, seed).
SearchResult search(BoundId id, int trials, const SearchDistribution& dist, std::uint64_t seed,
                    double tol = kTolMaj);

/// Re-evaluates a recorded violation from its spec alone.
BoundReport reverify(BoundId id, const Violation& v, double tol = kTolMaj);

/// Probes the regime outside the registry: dim X < dim Y with an A-invariant
/// but non-contiguous X, testing the existence reading of the equidimensional
/// sine-squared bound (|ritz_X - top slice of ritz_Y| weakly majorized by the
/// scalar-spread sin^2 right-hand side). No theorem covers this combination;
/// violations are expected findings, not bugs.
SearchResult search_invariant_slice_regime(int trials, std::uint64_t seed, double tol = kTolMaj);

struct FemRow {
  double h = 0.0;
  double sin_planted[2] = {0.0, 0.0};   // [h^alpha, h]
  double sin_measured[2] = {0.0, 0.0};  // recovered from the generated pair
  double ritz_approx[2] = {0.0, 0.0};   // Rayleigh-Ritz values on Y
  double trace_error = 0.0;             // (l1 + l2) - (l1h + l2h)
  double trace_bound_maj = 0.0;         // l1 sin^2(theta1) + l2 sin^2(theta2)
  double trace_bound_comp = 0.0;        // (l1 + l2) max sin^2
  double ratio_maj_over_comp = 0.0;
  double ratio_closed_form = 0.0;       // (l1 h^2a + l2 h^2) / ((l1+l2) h^2a)
  double prod_error = 0.0;              // l1 l2 / (l1h l2h) - 1
  double prod_bound = 0.0;              // prod(1 + tan^2) - 1; inf at theta = pi/2
  bool trace_within_bound = false;
};

/// Synthetic surrogate for the FEM eigenvalue error discussion: a diagonal
/// operator with top eigenvalues lambda1 >= lambda2, a 2-dimensional
/// contiguous-top X, and Y planted so that sin Theta = [h^alpha, h]. The
/// bounds use 0 in place of lambda_min on the sum space.
std::vector<FemRow> fem_demo(double lambda1, double lambda2, double alpha,
                             std::span<const double> h_grid);

enum class EmitFormat { json, csv };

std::string to_json(std::span<const ReportRow> rows);
std::string to_csv(std::span<const ReportRow> rows);
std::string to_json(std::span<const FemRow> rows);
std::string to_csv(std::span<const FemRow> rows);

/// Writes rows to path in the requested format; deterministic serialization.
void emit(std::span<const ReportRow> rows, EmitFormat format, const std::string& path);
void emit(std::span<const FemRow> rows, EmitFormat format, const std::string& path);

}  // namespace ritzmaj
