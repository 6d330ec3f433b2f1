#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ritzmaj/majorization.hpp"
#include "ritzmaj/mat.hpp"
#include "ritzmaj/ritz.hpp"
#include "ritzmaj/subspaces.hpp"

namespace ritzmaj {

// Margin applied to strict hypotheses (theta < pi/2, Ritz gap > 0);
// instances inside the margin are classified precondition-failed.
inline constexpr double kTolStrict = 1e-8;

enum class BoundId {
  ritz_sin,
  invariant_sin2,
  conj_spread_sin,
  spread_sin2,
  top_sin2,
  top_sin2_max,
  mult_log_tan,
  mult_tan2,
  nq_sin2,
  nq_log_tan,
  nq_tan2,
  nq_max_sin2,
  rel_max_sinA2,
  rel_log_tanA,
  rel_tanA2,
  conj_spread_sin_divided,
  rel_sinA2_maj,
};

enum class BoundStatus { proven, conjecture, known_false };

std::string to_string(BoundId id);
std::string to_string(BoundStatus s);
BoundId bound_id_from_string(const std::string& name);  // InvalidInput on unknown id
BoundStatus status_of(BoundId id);
std::vector<BoundId> all_bound_ids();

/// True when the right-hand side of the bound scales linearly with A (the
/// sine/spread families); the multiplicative and relative families do not.
bool is_absolute(BoundId id);

enum class BoundRelation { weak_maj, log_weak_maj, componentwise, scalar_max };

std::string to_string(BoundRelation r);

struct BoundReport {
  BoundId id{};
  BoundStatus status{};
  bool precondition_ok = false;
  std::vector<std::string> precondition_failures;
  std::vector<double> lhs;
  std::vector<double> rhs;
  BoundRelation relation = BoundRelation::weak_maj;
  std::optional<MajorizationVerdict> maj;
  /// Majorization prefix margins, or per-component margins rhs[i] - lhs[i].
  std::vector<double> margins;
  bool holds = false;
};

/// Evaluates one bound on the triple (A, X, Y). Hypothesis violations are
/// reported via precondition_ok=false (holds=false), not as errors.
BoundReport evaluate(BoundId id, const Mat& a, const Subspace& x, const Subspace& y,
                     double tol = kTolMaj);

enum class ClassicalKind {
  lidskii,
  gelfand_naimark,
  sv_product,
  three_factor,
  pinching_weak,
  pinching_strong,
};

std::string to_string(ClassicalKind k);

/// Checks one of the classical spectral majorization inequalities on concrete
/// matrices. Expected inputs: lidskii {A,B} symmetric; gelfand-naimark {A,B}
/// square; sv-product {A,B} compatible; three-factor {A,B,C} square;
/// pinching-weak {A1,A2,B,C1,C2}; pinching-strong {A1,A2,B} with B symmetric.
MajorizationVerdict check_classical(ClassicalKind kind, std::span<const Mat> inputs,
                                    double tol = kTolMaj);

}  // namespace ritzmaj
