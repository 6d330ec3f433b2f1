#include "ritzmaj/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "ritzmaj/errors.hpp"
#include "ritzmaj/linalg.hpp"

namespace ritzmaj {

namespace {

struct BoundInfo {
  BoundId id;
  const char* name;
  BoundStatus status;
};

constexpr BoundInfo kBounds[] = {
    {BoundId::ritz_sin, "ritz-sin", BoundStatus::proven},
    {BoundId::invariant_sin2, "invariant-sin2", BoundStatus::proven},
    {BoundId::conj_spread_sin, "conj-spread-sin", BoundStatus::conjecture},
    {BoundId::spread_sin2, "spread-sin2", BoundStatus::proven},
    {BoundId::top_sin2, "top-sin2", BoundStatus::proven},
    {BoundId::top_sin2_max, "top-sin2-max", BoundStatus::proven},
    {BoundId::mult_log_tan, "mult-log-tan", BoundStatus::proven},
    {BoundId::mult_tan2, "mult-tan2", BoundStatus::proven},
    {BoundId::nq_sin2, "nq-sin2", BoundStatus::proven},
    {BoundId::nq_log_tan, "nq-log-tan", BoundStatus::proven},
    {BoundId::nq_tan2, "nq-tan2", BoundStatus::proven},
    {BoundId::nq_max_sin2, "nq-max-sin2", BoundStatus::proven},
    {BoundId::rel_max_sinA2, "rel-max-sinA2", BoundStatus::proven},
    {BoundId::rel_log_tanA, "rel-log-tanA", BoundStatus::proven},
    {BoundId::rel_tanA2, "rel-tanA2", BoundStatus::proven},
    {BoundId::conj_spread_sin_divided, "conj-spread-sin-divided", BoundStatus::known_false},
    {BoundId::rel_sinA2_maj, "rel-sinA2-maj", BoundStatus::known_false},
};

const BoundInfo& info_of(BoundId id) {
  for (const auto& b : kBounds)
    if (b.id == id) return b;
  throw InvalidInput("unknown bound id");
}

bool in(BoundId id, std::initializer_list<BoundId> set) {
  return std::find(set.begin(), set.end(), id) != set.end();
}

}  // namespace

std::string to_string(BoundId id) { return info_of(id).name; }

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::proven: return "proven";
    case BoundStatus::conjecture: return "conjecture";
    case BoundStatus::known_false: return "known-false";
  }
  return "?";
}

BoundId bound_id_from_string(const std::string& name) {
  for (const auto& b : kBounds)
    if (name == b.name) return b.id;
  throw InvalidInput("unknown bound id: " + name);
}

BoundStatus status_of(BoundId id) { return info_of(id).status; }

std::vector<BoundId> all_bound_ids() {
  std::vector<BoundId> out;
  for (const auto& b : kBounds) out.push_back(b.id);
  return out;
}

bool is_absolute(BoundId id) {
  return in(id, {BoundId::ritz_sin, BoundId::invariant_sin2, BoundId::conj_spread_sin,
                 BoundId::spread_sin2, BoundId::top_sin2, BoundId::top_sin2_max, BoundId::nq_sin2,
                 BoundId::nq_max_sin2, BoundId::conj_spread_sin_divided});
}

std::string to_string(BoundRelation r) {
  switch (r) {
    case BoundRelation::weak_maj: return "weak-maj";
    case BoundRelation::log_weak_maj: return "log-weak-maj";
    case BoundRelation::componentwise: return "componentwise";
    case BoundRelation::scalar_max: return "scalar-max";
  }
  return "?";
}

namespace {

std::vector<double> abs_sorted_diff(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = std::abs(a[i] - b[i]);
  return sort_desc(d);
}

// Entrywise a - b, both already decreasing.
std::vector<double> diff(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

bool all_nonneg(const std::vector<double>& v, double tol, double scale) {
  for (double e : v)
    if (e < -tol * (1.0 + scale)) return false;
  return true;
}

void finish_weak(BoundReport& rep, std::vector<double> lhs, std::vector<double> rhs, double tol,
                 bool nonneg_ok = true) {
  rep.relation = BoundRelation::weak_maj;
  rep.maj = weak_majorizes(lhs, rhs, tol);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.margins = rep.maj->prefix_margins;
  rep.holds = nonneg_ok && rep.maj->holds;
}

void finish_log_weak(BoundReport& rep, std::vector<double> lhs, std::vector<double> rhs, double tol,
                     bool nonneg_ok = true) {
  rep.relation = BoundRelation::log_weak_maj;
  rep.maj = log_weak_majorizes(lhs, rhs, tol);
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.margins = rep.maj->prefix_margins;
  rep.holds = nonneg_ok && rep.maj->holds;
}

// lhs_i in [-tol_i, rhs_i + tol_i] for every component.
void finish_componentwise(BoundReport& rep, BoundRelation relation, std::vector<double> lhs,
                          std::vector<double> rhs, double tol) {
  rep.relation = relation;
  rep.holds = true;
  rep.margins.resize(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    rep.margins[i] = rhs[i] - lhs[i];
    const double threshold = tol * (1.0 + std::max(std::abs(lhs[i]), std::abs(rhs[i])));
    if (rep.margins[i] < -threshold || lhs[i] < -threshold) rep.holds = false;
  }
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
}

}  // namespace

BoundReport evaluate(BoundId id, const Mat& a, const Subspace& x, const Subspace& y, double tol) {
  if (a.rows() != x.ambient_dim() || a.rows() != y.ambient_dim())
    throw InvalidInput("evaluate: ambient dim mismatch");

  BoundReport rep;
  rep.id = id;
  rep.status = status_of(id);

  const int p = x.dim();
  const int q = y.dim();
  auto fail = [&rep](std::string why) { rep.precondition_failures.push_back(std::move(why)); };

  const bool equal_dim_family =
      in(id, {BoundId::ritz_sin, BoundId::invariant_sin2, BoundId::conj_spread_sin,
              BoundId::spread_sin2, BoundId::top_sin2, BoundId::top_sin2_max, BoundId::mult_log_tan,
              BoundId::mult_tan2, BoundId::conj_spread_sin_divided});
  const bool rel_family = in(id, {BoundId::rel_max_sinA2, BoundId::rel_log_tanA, BoundId::rel_tanA2,
                                  BoundId::rel_sinA2_maj});
  const bool needs_top_contiguous =
      in(id, {BoundId::spread_sin2, BoundId::top_sin2, BoundId::top_sin2_max, BoundId::mult_log_tan,
              BoundId::mult_tan2, BoundId::nq_sin2, BoundId::nq_log_tan, BoundId::nq_tan2,
              BoundId::nq_max_sin2});
  const bool needs_theta_strict = in(id, {BoundId::mult_log_tan, BoundId::mult_tan2,
                                          BoundId::nq_log_tan, BoundId::nq_tan2}) ||
                                  rel_family;
  const bool needs_ritz_gap =
      in(id, {BoundId::mult_log_tan, BoundId::mult_tan2, BoundId::nq_log_tan, BoundId::nq_tan2});

  if (p > q) fail("dim X exceeds dim Y");
  if (equal_dim_family && p != q) fail("bound requires dim X = dim Y");
  if (!rep.precondition_failures.empty()) return rep;

  if (rel_family) {
    std::vector<double> eig_a = sym_eigvals(a);
    const double amax = std::max(std::abs(eig_a.front()), std::abs(eig_a.back()));
    if (eig_a.back() <= kTolStrict * std::max(amax, 1e-300))
      fail("A not positive definite");
    if (!rep.precondition_failures.empty()) return rep;
  }

  RitzSummary s = ritz_summary(a, x, y);
  Subspace sum = subspace_sum(x, y);

  if (id == BoundId::invariant_sin2) {
    if (!is_invariant(x, a).invariant && !is_invariant(y, a).invariant)
      fail("neither subspace is A-invariant");
  }
  if (needs_top_contiguous) {
    InvariantClassification c = classify_invariant(x, a, sum);
    if (!c.invariant)
      fail("X is not A-invariant");
    else if (!c.top)
      fail("X is not contiguous-top on the sum space");
  }
  if (rel_family) {
    InvariantClassification c = classify_invariant(x, a, sum);
    if (!c.invariant)
      fail("X is not A-invariant");
    else if (!c.bottom)
      fail("X is not contiguous-bottom on the sum space");
  }
  if (!rep.precondition_failures.empty()) return rep;

  AngleVector theta = rel_family ? angles_weighted(x, y, a) : angles(x, y);
  if (needs_theta_strict && theta.max_angle() >= std::numbers::pi / 2.0 - kTolStrict)
    fail("largest angle not strictly below pi/2");

  const double spread_full = s.lambda_max_sum - s.lambda_min_sum;
  const double gap_scale = 1.0 + std::abs(spread_full);
  if (needs_ritz_gap && s.ritz_x.back() - s.lambda_min_sum <= kTolStrict * gap_scale)
    fail("Ritz values of X not strictly above lambda_min on the sum space");
  if (!rep.precondition_failures.empty()) return rep;

  rep.precondition_ok = true;

  const std::vector<double> sin_t = theta.sines();
  const std::vector<double> sin2 = theta.sin_squared();
  const std::vector<double> tan2 = theta.tan_squared();

  switch (id) {
    case BoundId::ritz_sin:
    case BoundId::invariant_sin2: {
      std::vector<double> lhs = abs_sorted_diff(s.ritz_x, s.ritz_y);
      const auto& weight = (id == BoundId::ritz_sin) ? sin_t : sin2;
      std::vector<double> rhs(weight.size());
      for (std::size_t i = 0; i < weight.size(); ++i) rhs[i] = spread_full * weight[i];
      finish_weak(rep, std::move(lhs), std::move(rhs), tol);
      break;
    }
    case BoundId::conj_spread_sin:
    case BoundId::spread_sin2: {
      std::vector<double> lhs = abs_sorted_diff(s.ritz_x, s.ritz_y);
      const auto& weight = (id == BoundId::conj_spread_sin) ? sin_t : sin2;
      std::vector<double> rhs(weight.size());
      for (std::size_t i = 0; i < weight.size(); ++i) rhs[i] = s.spread[i] * weight[i];
      finish_weak(rep, std::move(lhs), std::move(rhs), tol);
      break;
    }
    case BoundId::top_sin2: {
      std::vector<double> raw = diff(s.ritz_x, s.ritz_y);
      const bool nonneg = all_nonneg(raw, tol, spread_full);
      std::vector<double> rhs(sin2.size());
      for (std::size_t i = 0; i < sin2.size(); ++i)
        rhs[i] = (s.ritz_x[i] - s.lambda_min_sum) * sin2[i];
      finish_weak(rep, sort_desc(raw), std::move(rhs), tol, nonneg);
      break;
    }
    case BoundId::top_sin2_max: {
      std::vector<double> raw = diff(s.ritz_x, s.ritz_y);
      const double max_sin2 = sin2.empty() ? 0.0 : sin2.front();
      std::vector<double> rhs(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i)
        rhs[i] = (s.ritz_x[i] - s.lambda_min_sum) * max_sin2;
      finish_componentwise(rep, BoundRelation::componentwise, std::move(raw), std::move(rhs), tol);
      break;
    }
    case BoundId::mult_log_tan:
    case BoundId::mult_tan2:
    case BoundId::nq_log_tan:
    case BoundId::nq_tan2: {
      const bool is_log = (id == BoundId::mult_log_tan || id == BoundId::nq_log_tan);
      std::vector<double> slice(s.ritz_y.begin(), s.ritz_y.begin() + p);
      std::vector<double> raw(static_cast<std::size_t>(p));
      bool degenerate = false;
      for (int i = 0; i < p; ++i) {
        const double denom = slice[static_cast<std::size_t>(i)] - s.lambda_min_sum;
        if (denom <= 0.0) {
          degenerate = true;
          break;
        }
        const double num_x = s.ritz_x[static_cast<std::size_t>(i)] - s.lambda_min_sum;
        raw[static_cast<std::size_t>(i)] =
            is_log ? num_x / denom
                   : (s.ritz_x[static_cast<std::size_t>(i)] - slice[static_cast<std::size_t>(i)]) / denom;
      }
      if (degenerate) {
        rep.precondition_ok = false;
        rep.holds = false;
        fail("Ritz slice of Y touches lambda_min on the sum space");
        break;
      }
      if (is_log) {
        bool nonneg = true;  // theorem's 0 <= log(...) part: every ratio >= 1
        for (double r : raw)
          if (r < 1.0 - tol * (1.0 + std::abs(r))) nonneg = false;
        std::vector<double> rhs(tan2.size());
        for (std::size_t i = 0; i < tan2.size(); ++i) rhs[i] = 1.0 + tan2[i];
        finish_log_weak(rep, std::move(raw), std::move(rhs), tol, nonneg);
      } else {
        const bool nonneg = all_nonneg(raw, tol, 1.0);
        finish_weak(rep, sort_desc(raw), tan2, tol, nonneg);
      }
      break;
    }
    case BoundId::nq_sin2: {
      std::vector<double> slice(s.ritz_y.begin(), s.ritz_y.begin() + p);
      std::vector<double> raw = diff(s.ritz_x, slice);
      const bool nonneg = all_nonneg(raw, tol, spread_full);
      std::vector<double> rhs(sin2.size());
      for (std::size_t i = 0; i < sin2.size(); ++i)
        rhs[i] = (s.ritz_x[i] - s.lambda_min_sum) * sin2[i];
      finish_weak(rep, sort_desc(raw), std::move(rhs), tol, nonneg);
      break;
    }
    case BoundId::nq_max_sin2: {
      std::vector<double> slice(s.ritz_y.begin(), s.ritz_y.begin() + p);
      std::vector<double> raw = diff(s.ritz_x, slice);
      const double max_sin2 = sin2.empty() ? 0.0 : sin2.front();
      std::vector<double> rhs(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i)
        rhs[i] = (s.ritz_x[i] - s.lambda_min_sum) * max_sin2;
      finish_componentwise(rep, BoundRelation::componentwise, std::move(raw), std::move(rhs), tol);
      break;
    }
    case BoundId::rel_max_sinA2:
    case BoundId::rel_sinA2_maj: {
      std::vector<double> slice(s.ritz_y.end() - p, s.ritz_y.end());
      std::vector<double> raw(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i)
        raw[static_cast<std::size_t>(i)] = 1.0 - s.ritz_x[static_cast<std::size_t>(i)] /
                                                     slice[static_cast<std::size_t>(i)];
      if (id == BoundId::rel_max_sinA2) {
        const double max_sin2 = sin2.empty() ? 0.0 : sin2.front();
        std::vector<double> rhs(raw.size(), max_sin2);
        finish_componentwise(rep, BoundRelation::scalar_max, std::move(raw), std::move(rhs), tol);
      } else {
        finish_weak(rep, sort_desc(raw), sin2, tol);
      }
      break;
    }
    case BoundId::rel_log_tanA: {
      std::vector<double> slice(s.ritz_y.end() - p, s.ritz_y.end());
      std::vector<double> ratio(static_cast<std::size_t>(p));
      bool nonneg = true;
      for (int i = 0; i < p; ++i) {
        ratio[static_cast<std::size_t>(i)] =
            slice[static_cast<std::size_t>(i)] / s.ritz_x[static_cast<std::size_t>(i)];
        if (ratio[static_cast<std::size_t>(i)] < 1.0 - tol * 2.0) nonneg = false;
      }
      std::vector<double> rhs(tan2.size());
      for (std::size_t i = 0; i < tan2.size(); ++i) rhs[i] = 1.0 + tan2[i];
      finish_log_weak(rep, std::move(ratio), std::move(rhs), tol, nonneg);
      break;
    }
    case BoundId::rel_tanA2: {
      std::vector<double> slice(s.ritz_y.end() - p, s.ritz_y.end());
      std::vector<double> raw(static_cast<std::size_t>(p));
      for (int i = 0; i < p; ++i)
        raw[static_cast<std::size_t>(i)] = slice[static_cast<std::size_t>(i)] /
                                               s.ritz_x[static_cast<std::size_t>(i)] -
                                           1.0;
      const bool nonneg = all_nonneg(raw, tol, 1.0);
      finish_weak(rep, sort_desc(raw), tan2, tol, nonneg);
      break;
    }
    case BoundId::conj_spread_sin_divided: {
      bool divisible = true;
      for (double sp : s.spread)
        if (sp <= kTolStrict * gap_scale) divisible = false;
      if (!divisible) {
        rep.precondition_ok = false;
        rep.holds = false;
        fail("spread vector has entries too close to zero to divide by");
        break;
      }
      std::vector<double> lhs = abs_sorted_diff(s.ritz_x, s.ritz_y);
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] /= s.spread[i];
      finish_weak(rep, std::move(lhs), sin_t, tol);
      break;
    }
  }
  return rep;
}

std::string to_string(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::lidskii: return "lidskii";
    case ClassicalKind::gelfand_naimark: return "gelfand-naimark";
    case ClassicalKind::sv_product: return "sv-product";
    case ClassicalKind::three_factor: return "three-factor";
    case ClassicalKind::pinching_weak: return "pinching-weak";
    case ClassicalKind::pinching_strong: return "pinching-strong";
  }
  throw InvalidInput("unknown classical kind");
}

namespace {

void expect_inputs(std::span<const Mat> inputs, std::size_t n, const char* who) {
  if (inputs.size() != n) throw InvalidInput(std::string(who) + ": wrong number of matrices");
}

std::vector<double> ratio_by_index(const std::vector<double>& num, const std::vector<double>& den) {
  std::vector<double> r(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (den[i] <= 0.0) throw InvalidInput("singular denominator factor in log-majorization check");
    r[i] = num[i] / den[i];
  }
  return r;
}

std::vector<double> elementwise_product_padded(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
  return a;
}

}  // namespace

MajorizationVerdict check_classical(ClassicalKind kind, std::span<const Mat> inputs, double tol) {
  switch (kind) {
    case ClassicalKind::lidskii: {
      expect_inputs(inputs, 2, "lidskii");
      const Mat& a = inputs[0];
      const Mat& b = inputs[1];
      if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput("lidskii: dimension mismatch");
      std::vector<double> la = sym_eigvals(a);
      std::vector<double> lb = sym_eigvals(b);
      std::vector<double> lab = sym_eigvals(a - b);
      std::vector<double> d(la.size());
      for (std::size_t i = 0; i < la.size(); ++i) d[i] = la[i] - lb[i];
      return strong_majorizes(d, lab, tol);
    }
    case ClassicalKind::gelfand_naimark: {
      expect_inputs(inputs, 2, "gelfand-naimark");
      const Mat& a = inputs[0];
      const Mat& b = inputs[1];
      if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw InvalidInput("gelfand-naimark: square matrices of equal size required");
      std::vector<double> sab = singular_values(a * b);
      std::vector<double> sb = singular_values(b);
      std::vector<double> sa = singular_values(a);
      return log_strong_majorizes(ratio_by_index(sab, sb), sa, tol);
    }
    case ClassicalKind::sv_product: {
      expect_inputs(inputs, 2, "sv-product");
      const Mat& a = inputs[0];
      const Mat& b = inputs[1];
      if (a.cols() != b.rows()) throw InvalidInput("sv-product: dimension mismatch");
      std::vector<double> sab = singular_values(a * b);
      std::vector<double> prod =
          elementwise_product_padded(singular_values(a), singular_values(b));
      return weak_majorizes(sab, prod, tol);
    }
    case ClassicalKind::three_factor: {
      expect_inputs(inputs, 3, "three-factor");
      const Mat& a = inputs[0];
      const Mat& b = inputs[1];
      const Mat& c = inputs[2];
      if (a.rows() != a.cols() || b.rows() != b.cols() || c.rows() != c.cols() ||
          a.rows() != b.rows() || b.rows() != c.rows())
        throw InvalidInput("three-factor: square matrices of equal size required");
      std::vector<double> sabc = singular_values(a * b * c);
      std::vector<double> sb = singular_values(b);
      std::vector<double> prod =
          elementwise_product_padded(singular_values(a), singular_values(c));
      return log_strong_majorizes(ratio_by_index(sabc, sb), prod, tol);
    }
    case ClassicalKind::pinching_weak: {
      expect_inputs(inputs, 5, "pinching-weak");
      const Mat& a1 = inputs[0];
      const Mat& a2 = inputs[1];
      const Mat& b = inputs[2];
      const Mat& c1 = inputs[3];
      const Mat& c2 = inputs[4];
      if (a1.rows() != b.rows() || a2.rows() != b.rows() || c1.rows() != b.cols() ||
          c2.rows() != b.cols())
        throw InvalidInput("pinching-weak: dimension mismatch");
      std::vector<double> lhs = singular_values(a1.transpose() * b * c1);
      std::vector<double> s2 = singular_values(a2.transpose() * b * c2);
      lhs.insert(lhs.end(), s2.begin(), s2.end());
      Mat left = sqrt_psd((a1 * a1.transpose() + a2 * a2.transpose()).symmetrized());
      Mat right = sqrt_psd((c1 * c1.transpose() + c2 * c2.transpose()).symmetrized());
      std::vector<double> rhs = singular_values(left * b * right);
      return weak_majorizes(lhs, rhs, tol);
    }
    case ClassicalKind::pinching_strong: {
      expect_inputs(inputs, 3, "pinching-strong");
      const Mat& a1 = inputs[0];
      const Mat& a2 = inputs[1];
      const Mat& b = inputs[2];
      if (a1.rows() != b.rows() || a2.rows() != b.rows() || b.rows() != b.cols())
        throw InvalidInput("pinching-strong: dimension mismatch");
      std::vector<double> lhs = sym_eigvals((a1.transpose() * b * a1).symmetrized());
      std::vector<double> l2 = sym_eigvals((a2.transpose() * b * a2).symmetrized());
      lhs.insert(lhs.end(), l2.begin(), l2.end());
      Mat root = sqrt_psd((a1 * a1.transpose() + a2 * a2.transpose()).symmetrized());
      std::vector<double> rhs = sym_eigvals((root * b * root).symmetrized());
      for (double& v : rhs) v = std::max(v, 0.0);  // positive part
      // The theorem matches sizes with zeros explicitly; the lhs may carry
      // negative eigenvalues, so pad here instead of inside the predicate.
      const std::size_t n = std::max(lhs.size(), rhs.size());
      lhs.resize(n, 0.0);
      rhs.resize(n, 0.0);
      return weak_majorizes(lhs, rhs, tol);
    }
  }
  throw InvalidInput("unknown classical kind");
}

}  // namespace ritzmaj
