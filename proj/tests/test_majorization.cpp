#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ritzmaj/errors.hpp"
#include "ritzmaj/linalg.hpp"
#include "ritzmaj/majorization.hpp"
#include "ritzmaj/mat.hpp"
#include "ritzmaj/rng.hpp"

using namespace ritzmaj;

namespace {

std::vector<double> random_nonneg(Rng& rng, std::size_t n, double hi = 2.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(0.0, hi);
  return v;
}

// Dominating vector: accumulate positive slack on the decreasing
// rearrangement, so x prec_w y by construction.
std::vector<double> dominate(Rng& rng, const std::vector<double>& x) {
  std::vector<double> y = sort_desc(x);
  double carry = 0.0;
  for (double& v : y) {
    carry += rng.uniform(0.0, 0.5);
    v += carry;
  }
  return y;
}

// Strongly majorizing vector: move mass from the tail entry to the head,
// keeping the total.
std::vector<double> dominate_strong(const std::vector<double>& x) {
  std::vector<double> y = sort_desc(x);
  y.front() += y.back();
  y.back() = 0.0;
  return y;
}

}  // namespace

TEST_CASE("sort_desc basics") {
  CHECK(sort_desc(std::vector<double>{1, 3, 2}) == std::vector<double>{3, 2, 1});
  CHECK(sort_desc(std::vector<double>{}) == std::vector<double>{});
  CHECK(sort_desc(std::vector<double>{-1, -1}) == std::vector<double>{-1, -1});
}

TEST_CASE("weak majorization on small hand cases") {
  MajorizationVerdict v = weak_majorizes(std::vector<double>{1, 1}, std::vector<double>{2, 0});
  CHECK(v.holds);
  CHECK(v.prefix_margins[0] == doctest::Approx(1.0));
  CHECK(v.prefix_margins[1] == doctest::Approx(0.0));

  MajorizationVerdict w = weak_majorizes(std::vector<double>{2, 0}, std::vector<double>{1, 1});
  CHECK_FALSE(w.holds);
  CHECK(w.prefix_margins[0] == doctest::Approx(-1.0));
  CHECK(w.worst_k == 0);
}

TEST_CASE("weak majorization is reflexive with zero margins") {
  std::vector<double> x{0.3, -0.2, 1.5};
  MajorizationVerdict v = weak_majorizes(x, x);
  CHECK(v.holds);
  for (double m : v.prefix_margins) CHECK(m == doctest::Approx(0.0));
}

TEST_CASE("zero padding applies only to nonnegative vectors") {
  CHECK(weak_majorizes(std::vector<double>{1.0}, std::vector<double>{2, 0, 0}).holds);
  CHECK_THROWS_AS(weak_majorizes(std::vector<double>{-1.0}, std::vector<double>{2, 0, 0}),
                  ConventionViolation);
}

TEST_CASE("strong majorization needs total-sum equality") {
  CHECK(strong_majorizes(std::vector<double>{1, 1}, std::vector<double>{2, 0}).holds);
  MajorizationVerdict v = strong_majorizes(std::vector<double>{1, 0}, std::vector<double>{2, 0});
  CHECK_FALSE(v.holds);
  CHECK(weak_majorizes(std::vector<double>{1, 0}, std::vector<double>{2, 0}).holds);
}

TEST_CASE("Lidskii difference instance satisfies strong majorization") {
  Rng rng(101);
  Mat a = Mat::gaussian(rng, 6, 6).symmetrized();
  Mat b = Mat::gaussian(rng, 6, 6).symmetrized();
  std::vector<double> la = sym_eigvals(a);
  std::vector<double> lb = sym_eigvals(b);
  std::vector<double> lab = sym_eigvals(a - b);
  std::vector<double> d(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) d[i] = la[i] - lb[i];
  CHECK(strong_majorizes(d, lab).holds);
}

TEST_CASE("log weak majorization on prefix products") {
  CHECK(log_weak_majorizes(std::vector<double>{2, 2}, std::vector<double>{4, 1}).holds);
  MajorizationVerdict v = log_weak_majorizes(std::vector<double>{4, 1}, std::vector<double>{2, 2});
  CHECK_FALSE(v.holds);
  CHECK(v.worst_k == 0);
  CHECK_THROWS_AS(log_weak_majorizes(std::vector<double>{-1, 1}, std::vector<double>{1, 1}),
                  InvalidInput);
}

TEST_CASE("log weak majorization zero conventions") {
  // zero on the left satisfies the remaining prefixes
  CHECK(log_weak_majorizes(std::vector<double>{2, 0}, std::vector<double>{2, 0.5}).holds);
  // zero on the right forces the left prefix product to vanish too
  CHECK_FALSE(log_weak_majorizes(std::vector<double>{2, 0.5}, std::vector<double>{2, 0}).holds);
  CHECK(log_weak_majorizes(std::vector<double>{2, 0}, std::vector<double>{2, 0}).holds);
}

TEST_CASE("Gelfand-Naimark instance is a log-strong majorization") {
  Rng rng(102);
  Mat a = Mat::gaussian(rng, 5, 5);
  Mat b = Mat::gaussian(rng, 5, 5);
  std::vector<double> sab = singular_values(a * b);
  std::vector<double> sb = singular_values(b);
  std::vector<double> sa = singular_values(a);
  std::vector<double> ratio(sab.size());
  for (std::size_t i = 0; i < sab.size(); ++i) ratio[i] = sab[i] / sb[i];
  CHECK(log_strong_majorizes(ratio, sa).holds);
  CHECK_FALSE(log_strong_majorizes(ratio, std::vector<double>{0.5, 0.5, 0.5, 0.5, 0.5}).holds);
}

TEST_CASE("transitivity over random nonnegative triples") {
  Rng rng(103);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> x = random_nonneg(rng, 8);
    std::vector<double> y = dominate(rng, x);
    std::vector<double> z = dominate(rng, y);
    REQUIRE(weak_majorizes(x, y).holds);
    REQUIRE(weak_majorizes(y, z).holds);
    CHECK(weak_majorizes(x, z).holds);
  }
}

TEST_CASE("elementwise product with a decreasing nonnegative vector preserves weak majorization") {
  Rng rng(104);
  for (int t = 0; t < 400; ++t) {
    std::vector<double> a = sort_desc(random_nonneg(rng, 6));
    std::vector<double> b = dominate(rng, a);  // decreasing by construction
    std::vector<double> c = sort_desc(random_nonneg(rng, 6));
    std::vector<double> ac(6), bc(6);
    for (std::size_t i = 0; i < 6; ++i) {
      ac[i] = a[i] * c[i];
      bc[i] = b[i] * c[i];
    }
    REQUIRE(weak_majorizes(a, b).holds);
    CHECK(weak_majorizes(ac, bc).holds);
  }
}

TEST_CASE("sums of same-ordered bounds add up") {
  Rng rng(105);
  for (int t = 0; t < 400; ++t) {
    std::vector<double> a = random_nonneg(rng, 5);
    std::vector<double> b = dominate(rng, a);
    std::vector<double> c = random_nonneg(rng, 5);
    std::vector<double> d = dominate(rng, c);
    // b and d are both decreasing, so a + c prec_w b + d
    std::vector<double> as = sort_desc(a), cs = sort_desc(c);
    std::vector<double> ac(5), bd(5);
    for (std::size_t i = 0; i < 5; ++i) {
      ac[i] = as[i] + cs[i];
      bd[i] = b[i] + d[i];
    }
    CHECK(weak_majorizes(ac, bd).holds);
  }
}

TEST_CASE("monotone convex map preserves weak majorization") {
  Rng rng(106);
  for (int t = 0; t < 400; ++t) {
    std::vector<double> a = sort_desc(random_nonneg(rng, 5, 1.5));
    std::vector<double> b = dominate(rng, a);
    std::vector<double> ea(5), eb(5);
    for (std::size_t i = 0; i < 5; ++i) {
      ea[i] = std::exp(a[i]);
      eb[i] = std::exp(b[i]);
    }
    REQUIRE(weak_majorizes(a, b).holds);
    CHECK(weak_majorizes(ea, eb).holds);
  }
}

TEST_CASE("concatenation preserves strong majorization") {
  Rng rng(107);
  for (int t = 0; t < 400; ++t) {
    std::vector<double> a = random_nonneg(rng, 4);
    std::vector<double> c = dominate_strong(a);
    std::vector<double> b = random_nonneg(rng, 3);
    std::vector<double> d = dominate_strong(b);
    REQUIRE(strong_majorizes(a, c).holds);
    REQUIRE(strong_majorizes(b, d).holds);
    std::vector<double> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    std::vector<double> cd = c;
    cd.insert(cd.end(), d.begin(), d.end());
    CHECK(strong_majorizes(ab, cd).holds);
  }
}
