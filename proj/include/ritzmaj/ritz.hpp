#pragma once

#include <vector>

#include "ritzmaj/mat.hpp"
#include "ritzmaj/subspaces.hpp"

namespace ritzmaj {

/// Ritz values of A on the trial subspace S: eigenvalues of S^T A S,
/// decreasing.
std::vector<double> ritz_values(const Mat& a, const Subspace& s);

/// The k largest Ritz values of A on Y (decreasing). Throws InvalidInput for
/// k outside [1, dim Y].
std::vector<double> ritz_top_slice(const Mat& a, const Subspace& y, int k);

/// The k smallest Ritz values of A on Y, still reported decreasing.
std::vector<double> ritz_bottom_slice(const Mat& a, const Subspace& y, int k);

/// Everything the bound evaluators need about the pair (X, Y): Ritz values on
/// X, Y and on the sum space, the extreme sum-space Ritz values, and the
/// spread vector spread[i] = ritz_sum[i] - ritz_sum[m-1-i] for i < dim X.
/// Entries of spread past dim(X+Y) - dim Y are taken as computed (possibly
/// negative); consumers multiply them by the matching zero sines.
struct RitzSummary {
  std::vector<double> ritz_x;    // dim X values, decreasing
  std::vector<double> ritz_y;    // dim Y values, decreasing
  std::vector<double> ritz_sum;  // dim(X+Y) values, decreasing
  double lambda_min_sum = 0.0;
  double lambda_max_sum = 0.0;
  std::vector<double> spread;    // dim X values
  int dim_sum = 0;
};

RitzSummary ritz_summary(const Mat& a, const Subspace& x, const Subspace& y);

}  // namespace ritzmaj
