#pragma once

#include <string>
#include <vector>

#include "ritzmaj/linalg.hpp"
#include "ritzmaj/mat.hpp"

namespace ritzmaj {

inline constexpr double kTolOrtho = 1e-10;    // basis orthonormality check
inline constexpr double kTolInvariant = 1e-8; // invariance residual, relative

/// A p-dimensional subspace of R^n stored as an orthonormal basis block.
class Subspace {
 public:
  /// Wraps an already-orthonormal basis; validates ||B^T B - I||_F <= 1e-10.
  explicit Subspace(Mat basis);

  /// Orthonormalizes the columns of b first (column count = numerical rank).
  static Subspace span_of(const Mat& b, double rank_tol = kRankTol);

  static Subspace coordinate_span(int ambient_dim, const std::vector<int>& axes);

  int ambient_dim() const { return basis_.rows(); }
  int dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }

 private:
  Mat basis_;
};

/// Principal angles, decreasing, each in [0, pi/2]. Length = dim of the FROM
/// subspace.
struct AngleVector {
  std::vector<double> radians;

  std::vector<double> sines() const;     // decreasing
  std::vector<double> cosines() const;   // increasing
  std::vector<double> sin_squared() const;
  std::vector<double> tan_squared() const;
  double max_angle() const { return radians.empty() ? 0.0 : radians.front(); }
};

/// Angles from X to Y (dim X <= dim Y required). Dual-path: cosines from
/// S(Y^T X), sines from S((I - Y Y^T) X); each angle comes from whichever
/// path is well conditioned for it.
AngleVector angles(const Subspace& x, const Subspace& y);

/// Angles from X to Y in the scalar product induced by symmetric positive
/// definite A, via the Cholesky change of metric.
AngleVector angles_weighted(const Subspace& x, const Subspace& y, const Mat& a);

/// Orthonormal basis of span([X | Y]).
Subspace subspace_sum(const Subspace& x, const Subspace& y);

struct InvarianceCheck {
  bool invariant = false;
  double residual = 0.0;  // ||A X - X (X^T A X)||_F
};

InvarianceCheck is_invariant(const Subspace& x, const Mat& a, double tol = kTolInvariant);

enum class InvariantClass { not_invariant, invariant, contiguous_top, contiguous_bottom };

std::string to_string(InvariantClass c);

/// Fine-grained classification; with a degenerate spectrum a subspace can be
/// contiguous at both ends at once.
struct InvariantClassification {
  bool invariant = false;
  bool top = false;
  bool bottom = false;
};

InvariantClassification classify_invariant(const Subspace& x, const Mat& a, const Subspace& ctx,
                                           double tol = kTolInvariant);

/// Classifies an A-invariant subspace by whether its Ritz values form the
/// contiguous top (or bottom) of the spectrum of the compression of A to the
/// context subspace (normally the sum space X+Y). Ties resolve to
/// contiguous-top.
InvariantClass invariant_class(const Subspace& x, const Mat& a, const Subspace& ctx,
                               double tol = kTolInvariant);

}  // namespace ritzmaj
