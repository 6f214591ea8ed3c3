#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ifslab/errors.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/numerics.hpp"
#include "support.hpp"

using namespace ifslab;

TEST_CASE("poly_eval basics") {
  const std::vector<int> one{1};
  CHECK(poly_eval(one, Complex(0.3, -2.0)) == Complex(1.0, 0.0));
  const std::vector<int> c{1, 1, 1};
  CHECK(poly_eval(c, Complex(0.5, 0.0)).real() == doctest::Approx(1.75).epsilon(1e-15));
  const std::vector<int> first{1, -2, 0, 2};
  CHECK(std::abs(poly_eval(first, Complex(0.5957439, 0.2544259))) < 1e-5);
}

TEST_CASE("poly_eval matches a naive power sum") {
  auto rng = testing::make_rng(1);
  std::uniform_int_distribution<int> coeff(-2, 2), degree(0, 30);
  std::uniform_real_distribution<double> radius(0.0, 0.8), angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> c(degree(rng) + 1);
    for (int& x : c) x = coeff(rng);
    const Complex z = std::polar(radius(rng), angle(rng));
    Complex naive(0.0, 0.0);
    double scale = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const Complex term = static_cast<double>(c[j]) * std::pow(z, static_cast<int>(j));
      naive += term;
      scale += std::abs(term);
    }
    CHECK(std::abs(poly_eval(c, z) - naive) <= 1e-12 * std::max(scale, 1.0));
  }
}

TEST_CASE("poly_derivative_eval against finite differences") {
  const std::vector<int> c{1, -2, 0, 2, 1, -1};
  const Complex z(0.31, 0.42);
  const double h = 1e-6;
  const Complex fd = (poly_eval(c, z + h) - poly_eval(c, z - h)) / (2.0 * h);
  CHECK(std::abs(poly_derivative_eval(c, z) - fd) < 1e-8);
}

TEST_CASE("ipow") {
  const Complex z(0.3, 0.7);
  CHECK(ipow(z, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(ipow(z, 7) - std::pow(z, 7)) < 1e-14);
  CHECK(std::abs(ipow(z, -3) * ipow(z, 3) - 1.0) < 1e-14);
}

TEST_CASE("newton_root") {
  const std::vector<int> sq{-1, 0, 1};
  const Complex one = newton_root(sq, Complex(0.9, 0.0));
  CHECK(std::abs(one - 1.0) < 1e-12);

  const std::vector<int> first{1, -2, 0, 2};
  const Complex r1 = newton_root(first, Complex(0.6, 0.25));
  CHECK(std::abs(r1 - Complex(0.5957439, 0.2544259)) < 1e-6);
  CHECK(std::abs(poly_eval(first, r1)) <= newton_tolerance(first));

  const std::vector<int> fifth{1, 1, 1, -2};
  const Complex r5 = newton_root(fifth, Complex(-0.37, 0.52));
  CHECK(std::abs(r5 - Complex(-0.366, 0.520)) < 1e-3);
  CHECK(std::abs(poly_eval(fifth, r5)) <= newton_tolerance(fifth));
}

TEST_CASE("newton_root failure modes") {
  const std::vector<int> constant{3};
  CHECK_THROWS_AS(newton_root(constant, Complex(0.5, 0.0)), Error);
  const std::vector<int> sq{1, 0, 1};
  // z^2 + 1 from the origin: derivative is exactly zero at the seed.
  try {
    newton_root(sq, Complex(0.0, 0.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::derivative_vanished);
  }
  // Real seed on a polynomial without real roots never converges.
  try {
    newton_root(sq, Complex(0.5, 0.0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_convergence);
  }
}

TEST_CASE("truncate_set") {
  const PointSet zero{Complex(0.0, 0.0)};
  const PointSet t0 = truncate_set(zero, 1.0);
  REQUIRE(t0.size() == 1 + kBoundarySamples);
  CHECK(t0[0] == Complex(0.0, 0.0));
  for (std::size_t k = 1; k < t0.size(); ++k) CHECK(std::abs(std::abs(t0[k]) - 1.0) < 1e-15);

  const PointSet far{Complex(3.0, 0.0)};
  CHECK(truncate_set(far, 1.0).size() == kBoundarySamples);

  const Complex lambda(0.0, 1.0 / std::numbers::sqrt2);
  const PointSet sample = attractor_sample(lambda, 5, Alphabet::binary);
  REQUIRE(sample.size() == 64);
  std::size_t inside = 0;
  for (const Complex& z : sample) inside += std::abs(z) <= 1.0;
  CHECK(truncate_set(sample, 1.0).size() == inside + kBoundarySamples);

  CHECK_THROWS_AS(truncate_set(zero, 0.0), Error);
}

TEST_CASE("hausdorff_dr") {
  const PointSet a{Complex(0.0, 0.0)};
  const PointSet b{Complex(0.1, 0.0)};
  CHECK(hausdorff_dr(a, a, 1.0) == 0.0);
  CHECK(hausdorff_dr(a, b, 1.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(hausdorff_dr(a, b, 1.0) == hausdorff_dr(b, a, 1.0));

  auto rng = testing::make_rng(2);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  PointSet e(300), f(200);
  for (auto& z : e) z = {u(rng), u(rng)};
  for (auto& z : f) z = {u(rng), u(rng)};
  CHECK(hausdorff_dr(e, f, 1.0) == hausdorff_dr(f, e, 1.0));
  CHECK(hausdorff_dr(e, e, 1.0) == 0.0);
  CHECK(hausdorff_dr(e, f, 1.0, 4) == hausdorff_dr(e, f, 1.0, 1));
}

TEST_CASE("rescaled attractors approach a limit about zeta") {
  // Around the self-similarity center the attractor is asymptotically
  // invariant under z -> zeta + lambda^{-p}(z - zeta); the d_r distance
  // between a finite sample and its rescaled copy shrinks with depth.
  const auto lm = ifslab::landmark(5);
  const Complex lambda = ifslab::resolve_root(lm);
  const int p = lm.series.period();
  const Complex z0 = -1.0 / lambda;  // zeta for preperiod 0
  const Complex inv = ipow(lambda, -p);
  std::vector<double> d;
  for (int depth : {4, 6, 8}) {
    const PointSet s = attractor_sample(lambda, depth, Alphabet::ternary);
    PointSet centered(s.size()), scaled(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      centered[i] = s[i] - z0;
      scaled[i] = inv * (s[i] - z0);
    }
    d.push_back(hausdorff_dr(scaled, centered, 0.5));
  }
  CHECK(d[1] < d[0]);
  CHECK(d[2] < d[1]);
}
