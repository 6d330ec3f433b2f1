#include "ritzmaj/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "ritzmaj/errors.hpp"
#include "ritzmaj/linalg.hpp"
#include "ritzmaj/rng.hpp"

namespace ritzmaj {

std::string to_string(XKind k) {
  switch (k) {
    case XKind::contiguous_top: return "contiguous-top";
    case XKind::contiguous_bottom: return "contiguous-bottom";
    case XKind::invariant_random: return "invariant-random";
    case XKind::arbitrary: return "arbitrary";
  }
  return "?";
}

std::string to_string(YKind k) {
  switch (k) {
    case YKind::perturb: return "perturb";
    case YKind::planted_angles: return "planted-angles";
    case YKind::random_subspace: return "random";
  }
  return "?";
}

namespace {

void validate_spec(const InstanceSpec& spec) {
  if (spec.n < 1 || spec.dim_x < 1 || spec.dim_x > spec.dim_y || spec.dim_y > spec.n)
    throw InvalidInput("instance spec: need 1 <= dim_x <= dim_y <= n");
  if (static_cast<int>(spec.spectrum.size()) != spec.n)
    throw InvalidInput("instance spec: spectrum length must equal n");
  for (std::size_t i = 1; i < spec.spectrum.size(); ++i)
    if (spec.spectrum[i - 1] < spec.spectrum[i])
      throw InvalidInput("instance spec: spectrum must be decreasing");
  if (spec.y_kind == YKind::planted_angles) {
    if (spec.dim_x != spec.dim_y || spec.n < 2 * spec.dim_x)
      throw InvalidInput("instance spec: planted angles need dim_x = dim_y and n >= 2*dim_x");
    if (static_cast<int>(spec.planted_angles.size()) != spec.dim_x)
      throw InvalidInput("instance spec: planted angle count must equal dim_x");
  }
}

// Orthonormal block perpendicular to X, width = dim X.
Mat perp_block(Rng& rng, const Mat& xb) {
  const int n = xb.rows(), p = xb.cols();
  Mat g = Mat::gaussian(rng, n, p);
  Mat proj = g - xb * (xb.transpose() * g);
  return orthonormalize(proj);
}

}  // namespace

Instance generate(const InstanceSpec& spec) {
  validate_spec(spec);
  Rng rng(spec.seed);
  const int n = spec.n, p = spec.dim_x, q = spec.dim_y;

  Mat qmat = orthonormalize(Mat::gaussian(rng, n, n));
  if (qmat.cols() != n) throw NumericalFailure("generate: random rotation rank-deficient");
  Mat a = (qmat * Mat::diag(spec.spectrum) * qmat.transpose()).symmetrized();

  Mat xb;
  switch (spec.x_kind) {
    case XKind::contiguous_top:
      xb = qmat.cols_slice(0, p);
      break;
    case XKind::contiguous_bottom:
      xb = qmat.cols_slice(n - p, p);
      break;
    case XKind::invariant_random: {
      std::vector<int> idx(static_cast<std::size_t>(n));
      std::iota(idx.begin(), idx.end(), 0);
      for (int i = 0; i < p; ++i) {
        const std::size_t j = static_cast<std::size_t>(i) + rng.index(static_cast<std::size_t>(n - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
      }
      xb = Mat(n, p);
      for (int j = 0; j < p; ++j)
        for (int i = 0; i < n; ++i) xb(i, j) = qmat(i, idx[static_cast<std::size_t>(j)]);
      break;
    }
    case XKind::arbitrary:
      xb = orthonormalize(Mat::gaussian(rng, n, p));
      break;
  }
  if (xb.cols() != p) throw NumericalFailure("generate: X block rank-deficient");
  Subspace x{xb};

  Mat yb;
  switch (spec.y_kind) {
    case YKind::perturb: {
      Mat raw = xb + Mat::gaussian(rng, n, p).scaled(spec.perturb_eps);
      if (q > p) raw = raw.hcat(Mat::gaussian(rng, n, q - p));
      yb = orthonormalize(raw);
      break;
    }
    case YKind::planted_angles: {
      Mat w = perp_block(rng, xb);
      yb = Mat(n, p);
      for (int j = 0; j < p; ++j) {
        const double t = spec.planted_angles[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i)
          yb(i, j) = xb(i, j) * std::cos(t) + w(i, j) * std::sin(t);
      }
      break;
    }
    case YKind::random_subspace:
      yb = orthonormalize(Mat::gaussian(rng, n, q));
      break;
  }
  if (yb.cols() != q) throw NumericalFailure("generate: Y block rank-deficient");
  return {std::move(a), std::move(x), Subspace{yb}};
}

std::vector<ReportRow> repro(ReproCase c, double tol) {
  std::vector<ReportRow> rows;
  if (c == ReproCase::counterexample_1) {
    Mat a = Mat::diag({2.0, 1.0, 0.0, 0.0});
    Subspace x = Subspace::coordinate_span(4, {0, 1});
    Subspace y = Subspace::span_of(Mat{{1, 0}, {1, 2}, {2, -2}, {0, 1}});
    RowInstanceInfo info{0, 4, 2, 2};
    rows.push_back({evaluate(BoundId::spread_sin2, a, x, y, tol), info});
    rows.push_back({evaluate(BoundId::conj_spread_sin_divided, a, x, y, tol), info});
  } else {
    Mat a = Mat::diag({1.0, 2.0, 3.0, 100.0});
    Subspace x = Subspace::coordinate_span(4, {0, 1});
    Subspace y = Subspace::span_of(Mat{{-6, -1}, {-7, 1}, {2, 6}, {1, -7}});
    RowInstanceInfo info{0, 4, 2, 2};
    rows.push_back({evaluate(BoundId::rel_sinA2_maj, a, x, y, tol), info});
  }
  return rows;
}

SearchDistribution default_distribution(BoundId id) {
  SearchDistribution d;
  switch (id) {
    case BoundId::ritz_sin:
    case BoundId::conj_spread_sin:
      d.x_kinds = {XKind::arbitrary, XKind::contiguous_top, XKind::invariant_random};
      d.y_kinds = {YKind::random_subspace, YKind::perturb, YKind::planted_angles};
      break;
    case BoundId::invariant_sin2:
      d.x_kinds = {XKind::contiguous_top, XKind::contiguous_bottom, XKind::invariant_random};
      d.y_kinds = {YKind::random_subspace, YKind::perturb, YKind::planted_angles};
      break;
    case BoundId::spread_sin2:
    case BoundId::top_sin2:
    case BoundId::top_sin2_max:
      d.x_kinds = {XKind::contiguous_top};
      d.y_kinds = {YKind::random_subspace, YKind::perturb, YKind::planted_angles};
      d.inject_gap = true;
      break;
    case BoundId::mult_log_tan:
    case BoundId::mult_tan2:
      d.x_kinds = {XKind::contiguous_top};
      d.y_kinds = {YKind::perturb, YKind::planted_angles};
      d.inject_gap = true;
      break;
    case BoundId::nq_sin2:
    case BoundId::nq_max_sin2:
      d.equal_dims = false;
      d.x_kinds = {XKind::contiguous_top};
      d.y_kinds = {YKind::random_subspace, YKind::perturb};
      d.inject_gap = true;
      break;
    case BoundId::nq_log_tan:
    case BoundId::nq_tan2:
      d.equal_dims = false;
      d.x_kinds = {XKind::contiguous_top};
      d.y_kinds = {YKind::perturb};
      d.inject_gap = true;
      break;
    case BoundId::rel_max_sinA2:
    case BoundId::rel_log_tanA:
    case BoundId::rel_tanA2:
    case BoundId::rel_sinA2_maj:
      d.equal_dims = false;
      d.positive_spectrum = true;
      d.x_kinds = {XKind::contiguous_bottom};
      d.y_kinds = {YKind::perturb, YKind::planted_angles};
      d.inject_gap = true;
      break;
    case BoundId::conj_spread_sin_divided:
      // The known witness lives at n = 4 with 2-dimensional subspaces.
      d.n_min = 4;
      d.n_max = 6;
      d.x_kinds = {XKind::contiguous_top};
      d.y_kinds = {YKind::random_subspace, YKind::perturb};
      d.inject_gap = true;
      break;
  }
  return d;
}

namespace {

InstanceSpec draw_spec(const SearchDistribution& d, Rng& rng) {
  InstanceSpec spec;
  spec.n = d.n_min + static_cast<int>(rng.index(static_cast<std::size_t>(d.n_max - d.n_min + 1)));
  const int max_p = std::max(1, spec.n / 2);
  spec.dim_x = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_p)));
  if (d.equal_dims) {
    spec.dim_y = spec.dim_x;
  } else {
    const int max_q = std::max(spec.dim_x, (3 * spec.n) / 4);
    spec.dim_y = spec.dim_x +
                 static_cast<int>(rng.index(static_cast<std::size_t>(max_q - spec.dim_x + 1)));
  }

  spec.spectrum.resize(static_cast<std::size_t>(spec.n));
  for (double& v : spec.spectrum)
    v = d.positive_spectrum ? rng.uniform(0.1, 2.1) : rng.uniform(-1.0, 1.0);
  std::sort(spec.spectrum.begin(), spec.spectrum.end(), std::greater<>());
  if (d.inject_gap && rng.coin()) {
    const double gap = rng.uniform(0.5, 1.5);
    // Widen the spectral gap after index dim_x (from the appropriate end).
    const bool from_bottom = (d.x_kinds.size() == 1 && d.x_kinds[0] == XKind::contiguous_bottom);
    for (int i = 0; i < spec.n; ++i) {
      const bool lifted = from_bottom ? (i < spec.n - spec.dim_x) : (i < spec.dim_x);
      if (lifted) spec.spectrum[static_cast<std::size_t>(i)] += gap;
    }
  }

  spec.x_kind = d.x_kinds[rng.index(d.x_kinds.size())];
  spec.y_kind = d.y_kinds[rng.index(d.y_kinds.size())];
  if (spec.y_kind == YKind::planted_angles &&
      (spec.dim_x != spec.dim_y || spec.n < 2 * spec.dim_x))
    spec.y_kind = YKind::perturb;

  if (spec.y_kind == YKind::perturb) spec.perturb_eps = rng.uniform(0.01, d.max_perturb);
  if (spec.y_kind == YKind::planted_angles) {
    spec.planted_angles.resize(static_cast<std::size_t>(spec.dim_x));
    for (double& t : spec.planted_angles) t = rng.uniform(0.0, d.max_planted_angle);
    std::sort(spec.planted_angles.begin(), spec.planted_angles.end(), std::greater<>());
  }
  spec.seed = rng.next_u64();
  return spec;
}

bool still_violates(BoundId id, const InstanceSpec& spec, double tol) {
  Instance inst = generate(spec);
  BoundReport rep = evaluate(id, inst.a, inst.x, inst.y, tol);
  return rep.precondition_ok && !rep.holds;
}

// Reduce n toward 4 by halving, then halve perturbation / angle magnitudes,
// keeping only steps that preserve the violation.
InstanceSpec shrink(BoundId id, InstanceSpec spec, double tol, Rng& rng) {
  while (spec.n > 4) {
    const int target_n = std::max(4, spec.n / 2);
    bool improved = false;
    for (int attempt = 0; attempt < 16 && !improved; ++attempt) {
      InstanceSpec cand = spec;
      cand.n = target_n;
      cand.dim_x = std::min(cand.dim_x, std::max(1, target_n / 2));
      cand.dim_y = std::min(std::max(cand.dim_y, cand.dim_x), target_n);
      if (cand.y_kind == YKind::planted_angles) {
        cand.dim_y = cand.dim_x;
        cand.planted_angles.resize(static_cast<std::size_t>(cand.dim_x));
        if (cand.n < 2 * cand.dim_x) break;
      }
      cand.spectrum.assign(spec.spectrum.begin(), spec.spectrum.begin() + cand.n);
      std::sort(cand.spectrum.begin(), cand.spectrum.end(), std::greater<>());
      cand.seed = rng.next_u64();
      if (still_violates(id, cand, tol)) {
        spec = std::move(cand);
        improved = true;
      }
    }
    if (!improved) break;
  }
  for (int step = 0; step < 20; ++step) {
    InstanceSpec cand = spec;
    if (cand.y_kind == YKind::perturb) {
      cand.perturb_eps *= 0.5;
    } else if (cand.y_kind == YKind::planted_angles) {
      for (double& t : cand.planted_angles) t *= 0.5;
    } else {
      break;
    }
    if (!still_violates(id, cand, tol)) break;
    spec = std::move(cand);
  }
  return spec;
}

}  // namespace

SearchResult search(BoundId id, int trials, const SearchDistribution& dist, std::uint64_t seed,
                    double tol) {
  if (trials < 1) throw InvalidInput("search: trials must be >= 1");
  SearchResult out;
  out.id = id;
  for (int trial = 0; trial < trials; ++trial) {
    Rng trial_rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    for (int attempt = 0; attempt < 64; ++attempt) {
      InstanceSpec spec = draw_spec(dist, trial_rng);
      Instance inst = generate(spec);
      BoundReport rep = evaluate(id, inst.a, inst.x, inst.y, tol);
      if (!rep.precondition_ok) continue;
      ++out.trials;
      if (!rep.holds) out.violations.push_back({std::move(spec), std::move(rep)});
      break;
    }
  }

  Rng shrink_rng = Rng::stream(seed, 0x5157A11FD15ULL);
  for (const Violation& v : out.violations) {
    InstanceSpec reduced = shrink(id, v.spec, tol, shrink_rng);
    if (!out.min_violation || reduced.n < out.min_violation->spec.n) {
      Instance inst = generate(reduced);
      out.min_violation = Violation{reduced, evaluate(id, inst.a, inst.x, inst.y, tol)};
    }
  }
  return out;
}

BoundReport reverify(BoundId id, const Violation& v, double tol) {
  Instance inst = generate(v.spec);
  return evaluate(id, inst.a, inst.x, inst.y, tol);
}

namespace {

// Existence-reading slice variant of the sine-squared bound, evaluated
// directly from the primitives since it is not a registry bound.
BoundReport evaluate_invariant_slice(const Mat& a, const Subspace& x, const Subspace& y,
                                     double tol) {
  BoundReport rep;
  rep.id = BoundId::invariant_sin2;
  rep.status = BoundStatus::known_false;
  Subspace sum = subspace_sum(x, y);
  InvariantClassification c = classify_invariant(x, a, sum);
  if (!c.invariant || c.top || c.bottom) {
    rep.precondition_failures.push_back("X must be invariant and non-contiguous");
    return rep;
  }
  rep.precondition_ok = true;
  RitzSummary s = ritz_summary(a, x, y);
  const int p = x.dim();
  std::vector<double> slice(s.ritz_y.begin(), s.ritz_y.begin() + p);
  std::vector<double> lhs(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i)
    lhs[static_cast<std::size_t>(i)] =
        std::abs(s.ritz_x[static_cast<std::size_t>(i)] - slice[static_cast<std::size_t>(i)]);
  std::vector<double> sin2 = angles(x, y).sin_squared();
  std::vector<double> rhs(sin2.size());
  for (std::size_t i = 0; i < sin2.size(); ++i)
    rhs[i] = (s.lambda_max_sum - s.lambda_min_sum) * sin2[i];
  rep.relation = BoundRelation::weak_maj;
  rep.maj = weak_majorizes(sort_desc(lhs), rhs, tol);
  rep.lhs = sort_desc(lhs);
  rep.rhs = std::move(rhs);
  rep.margins = rep.maj->prefix_margins;
  rep.holds = rep.maj->holds;
  return rep;
}

}  // namespace

SearchResult search_invariant_slice_regime(int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw InvalidInput("search: trials must be >= 1");
  SearchDistribution dist;
  dist.equal_dims = false;
  dist.x_kinds = {XKind::invariant_random};
  dist.y_kinds = {YKind::perturb, YKind::random_subspace};
  dist.n_min = 5;
  dist.n_max = 10;

  SearchResult out;
  out.id = BoundId::invariant_sin2;
  for (int trial = 0; trial < trials; ++trial) {
    Rng trial_rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    for (int attempt = 0; attempt < 64; ++attempt) {
      InstanceSpec spec = draw_spec(dist, trial_rng);
      if (spec.dim_x >= spec.dim_y) continue;
      Instance inst = generate(spec);
      BoundReport rep = evaluate_invariant_slice(inst.a, inst.x, inst.y, tol);
      if (!rep.precondition_ok) continue;
      ++out.trials;
      if (!rep.holds) {
        out.violations.push_back({std::move(spec), std::move(rep)});
        if (!out.min_violation) out.min_violation = out.violations.back();
      }
      break;
    }
  }
  return out;
}

std::vector<FemRow> fem_demo(double lambda1, double lambda2, double alpha,
                             std::span<const double> h_grid) {
  if (!(lambda1 >= lambda2) || !(lambda2 > 0.0)) throw InvalidInput("fem_demo: need lambda1 >= lambda2 > 0");
  if (!(alpha > 0.0) || alpha > 1.0) throw InvalidInput("fem_demo: need alpha in (0, 1]");

  std::vector<FemRow> rows;
  for (double h : h_grid) {
    if (!(h > 0.0) || h > 1.0) throw InvalidInput("fem_demo: need h in (0, 1]");
    FemRow row;
    row.h = h;
    const double s1 = std::pow(h, alpha);
    const double s2 = h;
    row.sin_planted[0] = s1;
    row.sin_planted[1] = s2;

    Mat a = Mat::diag({lambda1, lambda2, 0.1 * lambda2, 0.01 * lambda2});
    Subspace x = Subspace::coordinate_span(4, {0, 1});
    Mat yb(4, 2);
    yb(0, 0) = std::sqrt(1.0 - s1 * s1);
    yb(2, 0) = s1;
    yb(1, 1) = std::sqrt(1.0 - s2 * s2);
    yb(3, 1) = s2;
    Subspace y{yb};

    std::vector<double> measured = angles(x, y).sines();
    row.sin_measured[0] = measured[0];
    row.sin_measured[1] = measured[1];

    std::vector<double> ritz_y = ritz_values(a, y);
    row.ritz_approx[0] = ritz_y[0];
    row.ritz_approx[1] = ritz_y[1];

    row.trace_error = (lambda1 + lambda2) - (ritz_y[0] + ritz_y[1]);
    // lambda_min on the sum space replaced by its lower bound 0, as the FEM
    // application does.
    row.trace_bound_maj = lambda1 * measured[0] * measured[0] + lambda2 * measured[1] * measured[1];
    row.trace_bound_comp = (lambda1 + lambda2) * measured[0] * measured[0];
    row.ratio_maj_over_comp = row.trace_bound_maj / row.trace_bound_comp;
    const double h2a = std::pow(h, 2.0 * alpha);
    row.ratio_closed_form = (lambda1 * h2a + lambda2 * h * h) / ((lambda1 + lambda2) * h2a);

    row.prod_error = (lambda1 * lambda2) / (ritz_y[0] * ritz_y[1]) - 1.0;
    double prod = 1.0;
    for (double s : measured) {
      const double c2 = 1.0 - s * s;
      prod *= (c2 > 0.0) ? 1.0 / c2 : std::numeric_limits<double>::infinity();
    }
    row.prod_bound = prod - 1.0;
    row.trace_within_bound = row.trace_error <= row.trace_bound_maj + 1e-12;
    rows.push_back(row);
  }
  return rows;
}

namespace {

nlohmann::ordered_json report_to_json(const ReportRow& row) {
  nlohmann::ordered_json j;
  j["bound_id"] = to_string(row.report.id);
  j["status"] = to_string(row.report.status);
  j["precondition_ok"] = row.report.precondition_ok;
  j["lhs"] = row.report.lhs;
  j["rhs"] = row.report.rhs;
  j["relation"] = to_string(row.report.relation);
  j["holds"] = row.report.holds;
  j["prefix_margins"] = row.report.margins;
  j["instance"] = {{"seed", row.instance.seed},
                   {"n", row.instance.n},
                   {"dim_x", row.instance.dim_x},
                   {"dim_y", row.instance.dim_y}};
  return j;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << content;
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace

std::string to_json(std::span<const ReportRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) arr.push_back(report_to_json(row));
  return arr.dump(2) + "\n";
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out =
      "bound_id,status,precondition_ok,holds,relation,seed,n,dim_x,dim_y,lhs,rhs,prefix_margins\n";
  for (const auto& row : rows) {
    out += to_string(row.report.id);
    out += ',' + to_string(row.report.status);
    out += row.report.precondition_ok ? ",true" : ",false";
    out += row.report.holds ? ",true" : ",false";
    out += ',' + to_string(row.report.relation);
    out += ',' + std::to_string(row.instance.seed);
    out += ',' + std::to_string(row.instance.n);
    out += ',' + std::to_string(row.instance.dim_x);
    out += ',' + std::to_string(row.instance.dim_y);
    out += ',' + join_doubles(row.report.lhs);
    out += ',' + join_doubles(row.report.rhs);
    out += ',' + join_doubles(row.report.margins);
    out += '\n';
  }
  return out;
}

std::string to_json(std::span<const FemRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["h"] = r.h;
    j["sin_planted"] = {r.sin_planted[0], r.sin_planted[1]};
    j["sin_measured"] = {r.sin_measured[0], r.sin_measured[1]};
    j["ritz_approx"] = {r.ritz_approx[0], r.ritz_approx[1]};
    j["trace_error"] = r.trace_error;
    j["trace_bound_maj"] = r.trace_bound_maj;
    j["trace_bound_comp"] = r.trace_bound_comp;
    j["ratio_maj_over_comp"] = r.ratio_maj_over_comp;
    j["ratio_closed_form"] = r.ratio_closed_form;
    j["prod_error"] = r.prod_error;
    if (std::isfinite(r.prod_bound))
      j["prod_bound"] = r.prod_bound;
    else
      j["prod_bound"] = "inf";
    j["trace_within_bound"] = r.trace_within_bound;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(std::span<const FemRow> rows) {
  std::string out =
      "h,sin_planted_1,sin_planted_2,sin_measured_1,sin_measured_2,ritz_1,ritz_2,trace_error,"
      "trace_bound_maj,trace_bound_comp,ratio_maj_over_comp,ratio_closed_form,prod_error,"
      "prod_bound,trace_within_bound\n";
  for (const auto& r : rows) {
    out += format_double(r.h);
    out += ',' + format_double(r.sin_planted[0]);
    out += ',' + format_double(r.sin_planted[1]);
    out += ',' + format_double(r.sin_measured[0]);
    out += ',' + format_double(r.sin_measured[1]);
    out += ',' + format_double(r.ritz_approx[0]);
    out += ',' + format_double(r.ritz_approx[1]);
    out += ',' + format_double(r.trace_error);
    out += ',' + format_double(r.trace_bound_maj);
    out += ',' + format_double(r.trace_bound_comp);
    out += ',' + format_double(r.ratio_maj_over_comp);
    out += ',' + format_double(r.ratio_closed_form);
    out += ',' + format_double(r.prod_error);
    out += ',' + format_double(r.prod_bound);
    out += r.trace_within_bound ? ",true" : ",false";
    out += '\n';
  }
  return out;
}

void emit(std::span<const ReportRow> rows, EmitFormat format, const std::string& path) {
  write_file(path, format == EmitFormat::json ? to_json(rows) : to_csv(rows));
}

void emit(std::span<const FemRow> rows, EmitFormat format, const std::string& path) {
  write_file(path, format == EmitFormat::json ? to_json(rows) : to_csv(rows));
}

}  // namespace ritzmaj
