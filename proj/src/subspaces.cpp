#include "ritzmaj/subspaces.hpp"

#include <algorithm>
#include <cmath>

#include "ritzmaj/errors.hpp"

namespace ritzmaj {

Subspace::Subspace(Mat basis) : basis_(std::move(basis)) {
  const int n = basis_.rows(), p = basis_.cols();
  if (p < 1 || p > n) throw InvalidInput("subspace: need 1 <= dim <= ambient_dim");
  Mat gram = basis_.transpose() * basis_;
  double defect = (gram - Mat::identity(p)).frob_norm();
  if (defect > kTolOrtho) throw InvalidInput("subspace: basis not orthonormal");
}

Subspace Subspace::span_of(const Mat& b, double rank_tol) {
  return Subspace(orthonormalize(b, rank_tol));
}

Subspace Subspace::coordinate_span(int ambient_dim, const std::vector<int>& axes) {
  Mat b(ambient_dim, static_cast<int>(axes.size()));
  for (std::size_t j = 0; j < axes.size(); ++j) b(axes[j], static_cast<int>(j)) = 1.0;
  return Subspace(std::move(b));
}

std::vector<double> AngleVector::sines() const {
  std::vector<double> s(radians.size());
  for (std::size_t i = 0; i < radians.size(); ++i) s[i] = std::sin(radians[i]);
  return s;
}

std::vector<double> AngleVector::cosines() const {
  std::vector<double> c(radians.size());
  for (std::size_t i = 0; i < radians.size(); ++i) c[i] = std::cos(radians[i]);
  return c;
}

std::vector<double> AngleVector::sin_squared() const {
  std::vector<double> s(radians.size());
  for (std::size_t i = 0; i < radians.size(); ++i) {
    const double v = std::sin(radians[i]);
    s[i] = v * v;
  }
  return s;
}

std::vector<double> AngleVector::tan_squared() const {
  std::vector<double> t(radians.size());
  for (std::size_t i = 0; i < radians.size(); ++i) {
    const double v = std::tan(radians[i]);
    t[i] = v * v;
  }
  return t;
}

AngleVector angles(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw InvalidInput("angles: ambient dim mismatch");
  if (x.dim() > y.dim()) throw InvalidInput("angles: dim X must not exceed dim Y");
  const int p = x.dim();

  // Cosines: S(Y^T X), decreasing.
  Mat yx = y.basis().transpose() * x.basis();
  std::vector<double> cos_desc = singular_values(yx);
  // Sines: S((I - Y Y^T) X) computed as X - Y (Y^T X), decreasing.
  Mat perp = x.basis() - y.basis() * yx;
  std::vector<double> sin_desc = singular_values(perp);

  AngleVector out;
  out.radians.resize(static_cast<std::size_t>(p));
  // i-th largest angle pairs the i-th largest sine with the i-th smallest
  // cosine.
  for (int i = 0; i < p; ++i) {
    const double c = std::clamp(cos_desc[static_cast<std::size_t>(p - 1 - i)], 0.0, 1.0);
    const double s = std::clamp(sin_desc[static_cast<std::size_t>(i)], 0.0, 1.0);
    out.radians[static_cast<std::size_t>(i)] = (c * c >= 0.5) ? std::asin(s) : std::acos(c);
  }
  std::sort(out.radians.begin(), out.radians.end(), std::greater<>());
  return out;
}

AngleVector angles_weighted(const Subspace& x, const Subspace& y, const Mat& a) {
  if (a.rows() != x.ambient_dim()) throw InvalidInput("angles_weighted: dim mismatch");
  Mat lt = cholesky(a).transpose();
  Subspace xw = Subspace::span_of(lt * x.basis());
  Subspace yw = Subspace::span_of(lt * y.basis());
  return angles(xw, yw);
}

Subspace subspace_sum(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw InvalidInput("subspace_sum: ambient dim mismatch");
  return Subspace::span_of(x.basis().hcat(y.basis()));
}

InvarianceCheck is_invariant(const Subspace& x, const Mat& a, double tol) {
  Mat ax = a * x.basis();
  Mat compressed = x.basis().transpose() * ax;  // X^T A X
  Mat resid = ax - x.basis() * compressed;
  InvarianceCheck out;
  out.residual = resid.frob_norm();
  out.invariant = out.residual <= tol * std::max(a.frob_norm(), 1e-300);
  return out;
}

std::string to_string(InvariantClass c) {
  switch (c) {
    case InvariantClass::not_invariant: return "not-invariant";
    case InvariantClass::invariant: return "invariant";
    case InvariantClass::contiguous_top: return "contiguous-top";
    case InvariantClass::contiguous_bottom: return "contiguous-bottom";
  }
  return "?";
}

InvariantClassification classify_invariant(const Subspace& x, const Mat& a, const Subspace& ctx,
                                           double tol) {
  InvariantClassification out;
  if (!is_invariant(x, a, tol).invariant) return out;
  out.invariant = true;

  const int p = x.dim();
  const int m = ctx.dim();
  if (p > m) return out;
  std::vector<double> ritz_x = sym_eigvals((x.basis().transpose() * (a * x.basis())).symmetrized());
  std::vector<double> ritz_ctx = sym_eigvals((ctx.basis().transpose() * (a * ctx.basis())).symmetrized());
  const double scale = tol * std::max(a.frob_norm(), 1.0);

  auto matches = [&](int offset) {
    for (int i = 0; i < p; ++i)
      if (std::abs(ritz_x[static_cast<std::size_t>(i)] -
                   ritz_ctx[static_cast<std::size_t>(offset + i)]) > scale)
        return false;
    return true;
  };

  out.top = matches(0);
  out.bottom = matches(m - p);
  return out;
}

InvariantClass invariant_class(const Subspace& x, const Mat& a, const Subspace& ctx, double tol) {
  InvariantClassification c = classify_invariant(x, a, ctx, tol);
  if (!c.invariant) return InvariantClass::not_invariant;
  if (c.top) return InvariantClass::contiguous_top;
  if (c.bottom) return InvariantClass::contiguous_bottom;
  return InvariantClass::invariant;
}

}  // namespace ritzmaj
