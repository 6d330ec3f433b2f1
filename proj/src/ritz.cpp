#include "ritzmaj/ritz.hpp"

#include "ritzmaj/errors.hpp"
#include "ritzmaj/linalg.hpp"

namespace ritzmaj {

std::vector<double> ritz_values(const Mat& a, const Subspace& s) {
  if (a.rows() != s.ambient_dim()) throw InvalidInput("ritz_values: dim mismatch");
  Mat compressed = (s.basis().transpose() * (a * s.basis())).symmetrized();
  return sym_eigvals(compressed);
}

std::vector<double> ritz_top_slice(const Mat& a, const Subspace& y, int k) {
  if (k < 1 || k > y.dim()) throw InvalidInput("ritz_top_slice: k out of range");
  std::vector<double> all = ritz_values(a, y);
  return {all.begin(), all.begin() + k};
}

std::vector<double> ritz_bottom_slice(const Mat& a, const Subspace& y, int k) {
  if (k < 1 || k > y.dim()) throw InvalidInput("ritz_bottom_slice: k out of range");
  std::vector<double> all = ritz_values(a, y);
  return {all.end() - k, all.end()};
}

RitzSummary ritz_summary(const Mat& a, const Subspace& x, const Subspace& y) {
  if (x.dim() > y.dim()) throw InvalidInput("ritz_summary: dim X must not exceed dim Y");
  RitzSummary out;
  out.ritz_x = ritz_values(a, x);
  out.ritz_y = ritz_values(a, y);
  Subspace sum = subspace_sum(x, y);
  out.ritz_sum = ritz_values(a, sum);
  out.dim_sum = sum.dim();
  out.lambda_max_sum = out.ritz_sum.front();
  out.lambda_min_sum = out.ritz_sum.back();
  const int p = x.dim();
  out.spread.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    out.spread[static_cast<std::size_t>(i)] =
        out.ritz_sum[static_cast<std::size_t>(i)] -
        out.ritz_sum[static_cast<std::size_t>(out.dim_sum - 1 - i)];
  return out;
}

}  // namespace ritzmaj
