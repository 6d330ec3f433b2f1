#include "ritzmaj/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ritzmaj/errors.hpp"

namespace ritzmaj {

std::string to_string(MajRelation r) {
  switch (r) {
    case MajRelation::weak: return "weak";
    case MajRelation::strong: return "strong";
    case MajRelation::log_weak: return "log-weak";
    case MajRelation::log_strong: return "log-strong";
  }
  return "?";
}

std::vector<double> sort_desc(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// Pads the shorter of a/b with zeros. Only legal for entrywise >= -tol
// vectors; with negative entries the padded zeros would land in the wrong
// place of the decreasing rearrangement.
void pad_to_common_length(std::vector<double>& a, std::vector<double>& b, double tol) {
  if (a.size() == b.size()) return;
  for (double v : a)
    if (v < -tol) throw ConventionViolation("zero-padding with negative entries");
  for (double v : b)
    if (v < -tol) throw ConventionViolation("zero-padding with negative entries");
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
}

MajorizationVerdict additive_verdict(std::span<const double> x, std::span<const double> y,
                                     double tol, bool strong) {
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  pad_to_common_length(xs, ys, tol);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  const std::size_t n = xs.size();
  double ymax = 0.0;
  for (double v : ys) ymax = std::max(ymax, std::abs(v));

  MajorizationVerdict out;
  out.relation = strong ? MajRelation::strong : MajRelation::weak;
  out.prefix_margins.resize(n);
  out.holds = true;
  double sx = 0.0, sy = 0.0, worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
    const double margin = sy - sx;
    out.prefix_margins[k] = margin;
    if (margin < worst) {
      worst = margin;
      out.worst_k = static_cast<int>(k);
    }
    const double threshold = tol * (1.0 + ymax * static_cast<double>(k + 1));
    if (margin < -threshold) out.holds = false;
    if (strong && k + 1 == n && std::abs(margin) > threshold) out.holds = false;
  }
  if (n == 0) out.holds = true;
  return out;
}

MajorizationVerdict log_verdict(std::span<const double> x, std::span<const double> y,
                                double tol, bool strong) {
  for (double v : x)
    if (v < 0.0) throw InvalidInput("log majorization requires nonnegative entries");
  for (double v : y)
    if (v < 0.0) throw InvalidInput("log majorization requires nonnegative entries");

  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  pad_to_common_length(xs, ys, tol);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());

  auto log_floor = [](double v) {
    if (v <= 0.0) return kLogUnderflowFloor;
    return std::max(std::log(v), kLogUnderflowFloor);
  };

  // Threshold scale ignores the underflow floor: use the largest finite |log|.
  double scale = 1.0;
  for (double v : xs)
    if (v > 0.0) scale = std::max(scale, std::abs(std::log(v)));
  for (double v : ys)
    if (v > 0.0) scale = std::max(scale, std::abs(std::log(v)));

  const std::size_t n = xs.size();
  MajorizationVerdict out;
  out.relation = strong ? MajRelation::log_strong : MajRelation::log_weak;
  out.prefix_margins.resize(n);
  out.holds = true;
  double sx = 0.0, sy = 0.0, worst = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    sx += log_floor(xs[k]);
    sy += log_floor(ys[k]);
    const double margin = sy - sx;
    out.prefix_margins[k] = margin;
    if (margin < worst) {
      worst = margin;
      out.worst_k = static_cast<int>(k);
    }
    const double threshold = tol * (1.0 + scale * static_cast<double>(k + 1));
    if (margin < -threshold) out.holds = false;
    if (strong && k + 1 == n && std::abs(margin) > threshold) out.holds = false;
  }
  if (n == 0) out.holds = true;
  return out;
}

}  // namespace

MajorizationVerdict weak_majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  return additive_verdict(x, y, tol, false);
}

MajorizationVerdict strong_majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  return additive_verdict(x, y, tol, true);
}

MajorizationVerdict log_weak_majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  return log_verdict(x, y, tol, false);
}

MajorizationVerdict log_strong_majorizes(std::span<const double> x, std::span<const double> y, double tol) {
  return log_verdict(x, y, tol, true);
}

}  // namespace ritzmaj
