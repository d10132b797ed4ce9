#include <doctest.h>

#include <cmath>

#include "striphyp/spaces.hpp"

using namespace striphyp;

TEST_CASE("strip norm of catalog gaussians") {
  TestFunction g = TestFunction::gaussian(1.0);
  SpaceParams abs_linear{Weight::linear(), 1.0, 1.0, Flavor::Beurling,
                         MinorantMode::Dilate};
  // sup e^{-x^2+y^2+|x|} at (1/2, +-1)
  CHECK(strip_norm(g, abs_linear) ==
        doctest::Approx(std::exp(1.25)).epsilon(1e-4));

  SpaceParams square{Weight::power(2.0), 1.0, 1.0, Flavor::Beurling,
                     MinorantMode::Dilate};
  // attained only in the y -> 1 limit
  CHECK(strip_norm(g, square) == doctest::Approx(std::exp(1.0)).epsilon(1e-4));

  CHECK(strip_norm(TestFunction::zero(), abs_linear) == 0.0);
}

TEST_CASE("norm homogeneity and parameter monotonicity") {
  TestFunction g = TestFunction::gaussian(1.0);
  SpaceParams p{Weight::linear(), 1.0, 1.0, Flavor::Beurling,
                MinorantMode::Dilate};
  double base = strip_norm(g, p);
  CHECK(strip_norm(g.scaled(complex(3.0, 0.0)), p) ==
        doctest::Approx(3.0 * base).epsilon(1e-10));

  SpaceParams p2 = p;
  p2.lambda = 2.0;
  CHECK(strip_norm(g, p2) >= base - 1e-12);
  SpaceParams p3 = p;
  p3.h = 2.0;
  CHECK(strip_norm(g, p3) >= base - 1e-12);
}

TEST_CASE("divergent norm reports the sentinel") {
  TestFunction g = TestFunction::gaussian(1.0);
  SpaceParams p{Weight::exp_weight(), 1.0, 1.0, Flavor::Beurling,
                MinorantMode::Dilate};
  CHECK(std::isinf(strip_norm(g, p)));
}

TEST_CASE("membership lattice") {
  TestFunction g = TestFunction::gaussian(1.0);
  MembershipReport r = membership_report(g, Weight::linear(), Flavor::Beurling,
                                         MinorantMode::Dilate);
  CHECK(r.member);
  CHECK(r.cells.size() == 25);

  r = membership_report(g, Weight::exp_weight(), Flavor::Beurling,
                        MinorantMode::Dilate);
  CHECK(!r.member);

  r = membership_report(TestFunction::zero(), Weight::exp_weight(),
                        Flavor::Beurling, MinorantMode::Dilate);
  CHECK(r.member);
}

TEST_CASE("reciprocal-minorant test functions dominate every dilate") {
  TestFunction tf = make_test_function(Weight::power(0.5), 1.0);
  // |phi(x)| e^{omega(2x)} -> 0 along a doubling grid
  double prev = 1e300;
  for (double x = 4.0; x <= 256.0; x *= 2.0) {
    double v = tf.modulus(complex(x, 0.0)) * std::exp(std::sqrt(2.0 * x));
    // far out the modulus underflows to an exact zero
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(prev < 1e-8);

  CHECK_THROWS_AS(make_test_function(Weight::exp_weight(), 1.0),
                  std::invalid_argument);

  TestFunction one = make_test_function(Weight::zero(), 1.0);
  CHECK(one.modulus(complex(2.0, 0.3)) == doctest::Approx(1.0));
}

TEST_CASE("products and strip bookkeeping") {
  TestFunction g = TestFunction::gaussian(1.0, complex(1.0, 0.0));
  TestFunction p = TestFunction::product(g, TestFunction::gaussian(0.5));
  complex z(0.3, 0.1);
  CHECK(std::abs(p(z) - g(z) * TestFunction::gaussian(0.5)(z)) < 1e-14);
  CHECK(std::isinf(g.strip_half_width()));

  TestFunction r = make_test_function(Weight::power(0.5), 1.0);
  CHECK(r.strip_half_width() == doctest::Approx(1.0));
  TestFunction pr = TestFunction::product(r, g);
  CHECK(pr.strip_half_width() == doctest::Approx(1.0));
}

TEST_CASE("line envelopes certify gaussian decay") {
  TestFunction g = TestFunction::gaussian(1.0);
  auto env = g.line_envelope(0.5);
  REQUIRE(env.has_value());
  for (double x = env->start; x <= env->start + 20.0; x += 0.7)
    CHECK(g.modulus(complex(x, 0.5)) <=
          env->coef * std::exp(-env->rate * x) * (1.0 + 1e-12));
}
