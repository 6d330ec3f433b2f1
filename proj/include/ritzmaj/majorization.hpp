#pragma once

#include <span>
#include <string>
#include <vector>

namespace ritzmaj {

inline constexpr double kTolMaj = 1e-9;
// Floor for log-space prefix sums; exp(-745) underflows double.
inline constexpr double kLogUnderflowFloor = -745.0;

enum class MajRelation { weak, strong, log_weak, log_strong };

std::string to_string(MajRelation r);

/// Outcome of one majorization comparison x vs y. prefix_margins[k] is the
/// rhs prefix sum (or log-product) minus the lhs prefix at length k+1, so the
/// relation holds when every margin clears the relative tolerance.
struct MajorizationVerdict {
  MajRelation relation = MajRelation::weak;
  bool holds = false;
  std::vector<double> prefix_margins;
  int worst_k = -1;  // 0-based index of the minimal margin
};

std::vector<double> sort_desc(std::span<const double> x);

/// x prec_w y: every prefix sum of the decreasing rearrangement of x is
/// bounded by the matching prefix sum for y. Vectors of unequal length are
/// zero-padded, which requires both to be entrywise >= -tol
/// (ConventionViolation otherwise).
MajorizationVerdict weak_majorizes(std::span<const double> x, std::span<const double> y,
                                   double tol = kTolMaj);

/// Weak majorization plus equality of total sums within tolerance.
MajorizationVerdict strong_majorizes(std::span<const double> x, std::span<const double> y,
                                     double tol = kTolMaj);

/// Prefix products of nonnegative vectors, evaluated as sums of logs with an
/// underflow floor. A zero on the left satisfies any remaining prefix; a zero
/// on the right forces the left prefix to be zero as well.
MajorizationVerdict log_weak_majorizes(std::span<const double> x, std::span<const double> y,
                                       double tol = kTolMaj);

/// log_weak plus equality of total products within tolerance.
MajorizationVerdict log_strong_majorizes(std::span<const double> x, std::span<const double> y,
                                         double tol = kTolMaj);

}  // namespace ritzmaj
