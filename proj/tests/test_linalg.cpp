#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ritzmaj/errors.hpp"
#include "ritzmaj/linalg.hpp"
#include "ritzmaj/rng.hpp"

using namespace ritzmaj;

namespace {

Mat random_symmetric(Rng& rng, int n) {
  return Mat::gaussian(rng, n, n).symmetrized();
}

double reconstruction_error(const Mat& m, const SymEig& e) {
  Mat rebuilt = e.vectors * Mat::diag(e.values) * e.vectors.transpose();
  return (rebuilt - m).frob_norm();
}

}  // namespace

TEST_CASE("sym_eig on diagonal input") {
  SymEig e = sym_eig(Mat::diag({2, 1, 0, 0}));
  CHECK(e.values[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(e.values[2]) < 1e-14);
  CHECK(std::abs(e.values[3]) < 1e-14);
  // eigenvector columns are signed coordinate vectors
  for (int k = 0; k < 4; ++k) {
    int nonzeros = 0;
    for (int i = 0; i < 4; ++i)
      if (std::abs(e.vectors(i, k)) > 1e-12) ++nonzeros;
    CHECK(nonzeros == 1);
  }
}

TEST_CASE("sym_eig identity") {
  SymEig e = sym_eig(Mat::identity(3));
  for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sym_eig 2x2 exchange matrix") {
  SymEig e = sym_eig(Mat{{0, 1}, {1, 0}});
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(e.vectors(0, 0)) - inv_sqrt2) < 1e-14);
  CHECK(std::abs(std::abs(e.vectors(1, 0)) - inv_sqrt2) < 1e-14);
  CHECK(e.vectors(0, 0) * e.vectors(1, 0) > 0);   // e1+e2 direction
  CHECK(e.vectors(0, 1) * e.vectors(1, 1) < 0);   // e1-e2 direction
}

TEST_CASE("sym_eig rejects non-symmetric input") {
  CHECK_THROWS_AS(sym_eig(Mat{{0, 1}, {0, 0}}), InvalidInput);
}

TEST_CASE("sym_eig residual, orthogonality and reconstruction on random matrices") {
  Rng rng(11);
  for (int n : {1, 2, 3, 5, 8, 16, 33}) {
    Mat m = random_symmetric(rng, n);
    SymEig e = sym_eig(m);
    const double scale = std::max(m.frob_norm(), 1.0);
    CHECK(reconstruction_error(m, e) < 1e-13 * n * scale);
    Mat mv_vd = m * e.vectors - e.vectors * Mat::diag(e.values);
    CHECK(mv_vd.frob_norm() < 1e-13 * n * scale);
    Mat gram = e.vectors.transpose() * e.vectors;
    CHECK((gram - Mat::identity(n)).frob_norm() < 1e-13 * n);
    CHECK(std::is_sorted(e.values.begin(), e.values.end(), std::greater_equal<>()));
  }
}

TEST_CASE("sym_eig spectrum is invariant under symmetric permutation") {
  Rng rng(12);
  Mat m = random_symmetric(rng, 6);
  // reverse-order permutation
  Mat perm(6, 6);
  for (int i = 0; i < 6; ++i) perm(i, 5 - i) = 1.0;
  Mat permuted = perm * m * perm.transpose();
  std::vector<double> a = sym_eigvals(m);
  std::vector<double> b = sym_eigvals(permuted);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("svd of identity column block") {
  Mat b(4, 2);
  b(0, 0) = 1.0;
  b(1, 1) = 1.0;
  std::vector<double> s = singular_values(b);
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("svd of 1x1 block") {
  std::vector<double> s = singular_values(Mat{{-3}});
  CHECK(s[0] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("svd matches Gram eigenvalue oracle and reconstructs") {
  Rng rng(13);
  for (auto [r, c] : {std::pair{5, 3}, {3, 5}, {6, 6}, {8, 2}}) {
    Mat b = Mat::gaussian(rng, r, c);
    Svd f = svd(b);
    const int k = std::min(r, c);
    CHECK(static_cast<int>(f.singular_values.size()) == k);
    CHECK(std::is_sorted(f.singular_values.begin(), f.singular_values.end(),
                         std::greater_equal<>()));
    for (double s : f.singular_values) CHECK(s >= 0.0);
    // independent oracle: sqrt of eigenvalues of B^T B via the Jacobi eigensolver
    std::vector<double> gram_eigs = sym_eigvals((b.transpose() * b).symmetrized());
    for (int i = 0; i < k; ++i) {
      const double oracle = std::sqrt(std::max(gram_eigs[static_cast<std::size_t>(i)], 0.0));
      CHECK(f.singular_values[static_cast<std::size_t>(i)] ==
            doctest::Approx(oracle).epsilon(1e-11));
    }
    // reconstruction
    Mat rebuilt = f.u * Mat::diag(f.singular_values) * f.v.transpose();
    CHECK((rebuilt - b).frob_norm() < 1e-13 * std::max(r, c) * std::max(b.frob_norm(), 1.0));
    // orthogonality of factors
    CHECK((f.u.transpose() * f.u - Mat::identity(k)).frob_norm() < 1e-12 * k);
    CHECK((f.v.transpose() * f.v - Mat::identity(k)).frob_norm() < 1e-12 * k);
  }
}

TEST_CASE("svd delivers small singular values with absolute accuracy") {
  // Columns with hugely different scales; one-sided Jacobi keeps the small
  // value to near machine absolute accuracy.
  Mat b(3, 2);
  b(0, 0) = 1.0;
  b(1, 1) = 1e-9;
  std::vector<double> s = singular_values(b);
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s[1] == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("svd of Y^T X from the first embedded example matches the Gram oracle") {
  Mat x(4, 2);
  x(0, 0) = 1.0;
  x(1, 1) = 1.0;
  Mat y = orthonormalize(Mat{{1, 0}, {1, 2}, {2, -2}, {0, 1}});
  Mat yx = y.transpose() * x;
  std::vector<double> s = singular_values(yx);
  std::vector<double> gram = sym_eigvals((yx.transpose() * yx).symmetrized());
  for (std::size_t i = 0; i < s.size(); ++i)
    CHECK(s[i] == doctest::Approx(std::sqrt(std::max(gram[i], 0.0))).epsilon(1e-12));
  // frozen values from the independent oracle (cosines of the principal angles)
  CHECK(s[0] == doctest::Approx(0.9551494974933329).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(0.2961240237438259).epsilon(1e-12));
}

TEST_CASE("orthonormalize keeps span and returns orthonormal columns") {
  Rng rng(14);
  Mat b = Mat::gaussian(rng, 6, 3);
  Mat q = orthonormalize(b);
  CHECK(q.cols() == 3);
  CHECK((q.transpose() * q - Mat::identity(3)).frob_norm() < 1e-12);
  // same span: projecting b onto q changes nothing
  Mat resid = b - q * (q.transpose() * b);
  CHECK(resid.frob_norm() < 1e-12 * b.frob_norm());
}

TEST_CASE("orthonormalize collapses duplicate columns") {
  Mat b(4, 2);
  for (int i = 0; i < 4; ++i) {
    b(i, 0) = i + 1.0;
    b(i, 1) = i + 1.0;
  }
  Mat q = orthonormalize(b);
  CHECK(q.cols() == 1);
}

TEST_CASE("orthonormalize rejects the zero block") {
  CHECK_THROWS_AS(orthonormalize(Mat(3, 2)), RankDeficient);
}

TEST_CASE("orthonormalize is idempotent up to right rotation") {
  Rng rng(15);
  Mat b = Mat::gaussian(rng, 7, 3);
  Mat q1 = orthonormalize(b);
  Mat q2 = orthonormalize(q1);
  // spans agree: singular values of q1^T q2 are all 1
  std::vector<double> s = singular_values(q1.transpose() * q2);
  for (double v : s) CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("sqrt_psd on diagonal and identity") {
  Mat r = sqrt_psd(Mat::diag({4, 1}));
  CHECK(r(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(r(0, 1)) < 1e-14);
  Mat i = sqrt_psd(Mat::identity(3));
  CHECK((i - Mat::identity(3)).frob_norm() < 1e-14);
}

TEST_CASE("sqrt_psd defining property on random PSD matrices") {
  Rng rng(16);
  Mat g = Mat::gaussian(rng, 5, 5);
  Mat m = (g * g.transpose()).symmetrized();
  Mat r = sqrt_psd(m);
  CHECK((r * r - m).frob_norm() / m.frob_norm() < 1e-12);
}

TEST_CASE("sqrt_psd rejects indefinite input") {
  CHECK_THROWS_AS(sqrt_psd(Mat::diag({1, -1})), NotPSD);
}

TEST_CASE("cholesky on identity and diagonal") {
  CHECK((cholesky(Mat::identity(3)) - Mat::identity(3)).frob_norm() < 1e-14);
  Mat l = cholesky(Mat::diag({4, 9}));
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(1, 1) == doctest::Approx(3.0));
}

TEST_CASE("cholesky of the weighted-metric example") {
  Mat l = cholesky(Mat::diag({1, 2, 3, 100}));
  CHECK(l(0, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(l(2, 2) == doctest::Approx(std::sqrt(3.0)));
  CHECK(l(3, 3) == doctest::Approx(10.0));
}

TEST_CASE("cholesky factorizes random SPD and rejects indefinite") {
  Rng rng(17);
  Mat g = Mat::gaussian(rng, 6, 6);
  Mat m = (g * g.transpose() + Mat::identity(6).scaled(0.5)).symmetrized();
  Mat l = cholesky(m);
  CHECK((l * l.transpose() - m).frob_norm() < 1e-12 * m.frob_norm());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) CHECK(l(i, j) == 0.0);
  CHECK_THROWS_AS(cholesky(Mat::diag({1, -2})), NotPD);
}
