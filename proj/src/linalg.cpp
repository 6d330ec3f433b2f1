#include "ritzmaj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ritzmaj/errors.hpp"

namespace ritzmaj {

namespace {

double off_diag_norm(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

void check_symmetric(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) throw InvalidInput(std::string(who) + ": matrix not square");
  const double scale = std::max(m.frob_norm(), 1e-300);
  if (m.symmetry_defect() > kTolSymRel * scale)
    throw InvalidInput(std::string(who) + ": matrix not symmetric within tolerance");
}

}  // namespace

SymEig sym_eig(const Mat& m) {
  check_symmetric(m, "sym_eig");
  const int n = m.rows();
  if (n == 0) return {{}, Mat(0, 0)};

  Mat a = m.symmetrized();
  Mat v = Mat::identity(n);
  const double stop = std::max(1e-15, 4.0 * n * 2.22e-16) * std::max(a.frob_norm(), 1e-300);

  int sweep = 0;
  while (off_diag_norm(a) > stop) {
    if (++sweep > kMaxSweeps) throw NumericalFailure("sym_eig: Jacobi sweeps exhausted");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a(r, p), arq = a(r, q);
            a(r, p) = arp - s * (arq + tau * arp);
            a(p, r) = a(r, p);
            a(r, q) = arq + s * (arp - tau * arq);
            a(q, r) = a(r, q);
          }
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i) > a(j, j); });

  SymEig out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  return out;
}

std::vector<double> sym_eigvals(const Mat& m) { return sym_eig(m).values; }

namespace {

// One-sided Jacobi on a block with rows >= cols: orthogonalizes column pairs.
Svd svd_tall(const Mat& b) {
  const int rows = b.rows(), cols = b.cols();
  Mat u = b;
  Mat v = Mat::identity(cols);

  auto col_dot = [&u, rows](int j, int k) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += u(i, j) * u(i, k);
    return s;
  };

  const double tol = 1e-15;
  const double eps = 2.22e-16;
  std::vector<char> live(static_cast<std::size_t>(cols), 1);
  for (int sweep = 0;; ++sweep) {
    // Columns whose norm sank below the rounding noise of the block carry no
    // information (they sit far under rank_tol); freeze them, or the noise
    // directions of rank-deficient inputs rotate forever.
    double max_sq = 0.0;
    for (int j = 0; j < cols; ++j) max_sq = std::max(max_sq, col_dot(j, j));
    const double freeze_sq = std::pow(4.0 * rows * eps, 2) * max_sq;
    for (int j = 0; j < cols; ++j)
      if (col_dot(j, j) <= freeze_sq) live[static_cast<std::size_t>(j)] = 0;
    bool rotated = false;
    for (int j = 0; j < cols - 1; ++j) {
      if (!live[static_cast<std::size_t>(j)]) continue;
      for (int k = j + 1; k < cols; ++k) {
        if (!live[static_cast<std::size_t>(k)]) continue;
        const double alpha = col_dot(j, j);
        const double beta = col_dot(k, k);
        const double gamma = col_dot(j, k);
        if (std::abs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < rows; ++i) {
          const double uij = u(i, j), uik = u(i, k);
          u(i, j) = c * uij - s * uik;
          u(i, k) = s * uij + c * uik;
        }
        for (int i = 0; i < cols; ++i) {
          const double vij = v(i, j), vik = v(i, k);
          v(i, j) = c * vij - s * vik;
          v(i, k) = s * vij + c * vik;
        }
      }
    }
    if (!rotated) break;
    if (sweep >= kMaxSweeps) throw NumericalFailure("svd: Jacobi sweeps exhausted");
  }

  std::vector<double> sigma(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows; ++i) s += u(i, j) * u(i, j);
    sigma[static_cast<std::size_t>(j)] = std::sqrt(s);
  }

  std::vector<int> order(static_cast<std::size_t>(cols));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&sigma](int i, int j) {
    return sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)];
  });

  Svd out;
  out.singular_values.resize(static_cast<std::size_t>(cols));
  out.u = Mat(rows, cols);
  out.v = Mat(cols, cols);
  for (int k = 0; k < cols; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    const double s = sigma[static_cast<std::size_t>(src)];
    out.singular_values[static_cast<std::size_t>(k)] = s;
    const double inv = s > 0.0 ? 1.0 / s : 0.0;
    for (int i = 0; i < rows; ++i) out.u(i, k) = u(i, src) * inv;
    for (int i = 0; i < cols; ++i) out.v(i, k) = v(i, src);
  }
  return out;
}

}  // namespace

Svd svd(const Mat& b) {
  if (b.rows() == 0 || b.cols() == 0)
    return {{}, Mat(b.rows(), 0), Mat(b.cols(), 0)};
  if (b.rows() >= b.cols()) return svd_tall(b);
  Svd t = svd_tall(b.transpose());
  return {std::move(t.singular_values), std::move(t.v), std::move(t.u)};
}

std::vector<double> singular_values(const Mat& b) { return svd(b).singular_values; }

Mat orthonormalize(const Mat& b, double rank_tol) {
  if (b.cols() == 0) throw RankDeficient("orthonormalize: empty block");
  Svd f = svd(b);
  const double smax = f.singular_values.empty() ? 0.0 : f.singular_values.front();
  if (smax <= 0.0) throw RankDeficient("orthonormalize: zero block");
  int rank = 0;
  for (double s : f.singular_values)
    if (s > rank_tol * smax) ++rank;
  if (rank == 0) throw RankDeficient("orthonormalize: numerically zero block");
  return f.u.cols_slice(0, rank);
}

Mat sqrt_psd(const Mat& m) {
  check_symmetric(m, "sqrt_psd");
  SymEig e = sym_eig(m);
  const double scale = std::max(m.frob_norm(), 1e-300);
  std::vector<double> roots(e.values.size());
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    double lam = e.values[i];
    if (lam < -kTolPsdRel * scale) throw NotPSD("sqrt_psd: negative eigenvalue beyond tolerance");
    roots[i] = std::sqrt(std::max(lam, 0.0));
  }
  Mat r = e.vectors * Mat::diag(roots) * e.vectors.transpose();
  return r.symmetrized();
}

Mat cholesky(const Mat& m) {
  check_symmetric(m, "cholesky");
  const int n = m.rows();
  const double threshold = kTolPdRel * std::max(m.frob_norm(), 1e-300);
  Mat l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= threshold) throw NotPD("cholesky: pivot failure");
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace ritzmaj
