#pragma once

#include <vector>

#include "ritzmaj/mat.hpp"

namespace ritzmaj {

// Default tolerances for the dense kernels at n <= 64.
inline constexpr double kTolSymRel = 1e-10;   // symmetry check, relative to ||M||_F
inline constexpr double kTolPsdRel = 1e-10;   // PSD clamp threshold, relative to ||M||_F
inline constexpr double kTolPdRel = 1e-13;    // Cholesky pivot threshold, relative to ||M||_F
inline constexpr double kRankTol = 1e-12;     // numerical rank cutoff, relative to sigma_max
inline constexpr int kMaxSweeps = 30;         // Jacobi sweep cap

struct SymEig {
  std::vector<double> values;  // decreasing
  Mat vectors;                 // columns are eigenvectors, matching values order
};

struct Svd {
  std::vector<double> singular_values;  // nonnegative, decreasing
  Mat u;                                // rows x min(rows,cols)
  Mat v;                                // cols x min(rows,cols)
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenpairs are returned in decreasing eigenvalue order (stable on ties).
SymEig sym_eig(const Mat& m);

/// Convenience: eigenvalues only.
std::vector<double> sym_eigvals(const Mat& m);

/// Thin SVD by one-sided Jacobi. Small singular values are delivered with
/// absolute accuracy ~ n*eps*sigma_max, which the small-angle path relies on.
Svd svd(const Mat& b);

std::vector<double> singular_values(const Mat& b);

/// Orthonormal basis of range(b), column count = numerical rank.
/// Throws RankDeficient when every column is below rank_tol * sigma_max.
Mat orthonormalize(const Mat& b, double rank_tol = kRankTol);

/// Symmetric PSD square root; eigenvalues in [-tol_psd*||M||_F, 0) are
/// clamped to zero, anything lower throws NotPSD.
Mat sqrt_psd(const Mat& m);

/// Lower-triangular L with L*L^T = m. Throws NotPD on pivot failure.
Mat cholesky(const Mat& m);

}  // namespace ritzmaj
