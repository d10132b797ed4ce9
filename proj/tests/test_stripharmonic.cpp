#include <doctest.h>

#include <cmath>
#include <numbers>

#include "striphyp/stripharmonic.hpp"

using namespace striphyp;
using std::numbers::pi;

TEST_CASE("kernel point values and symmetry") {
  CHECK(poisson_kernel(0.0, pi / 2) == doctest::Approx(1.0));
  CHECK(poisson_kernel(1.0, pi / 2) ==
        doctest::Approx(1.0 / std::cosh(1.0)).epsilon(1e-9));
  CHECK(poisson_kernel(-3.0, pi / 2) == poisson_kernel(3.0, pi / 2));
  CHECK(poisson_kernel(0.5, 0.25, 1.0) ==
        doctest::Approx(poisson_kernel(0.5 * pi, 0.25 * pi)));
  CHECK_THROWS_AS(poisson_kernel(0.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(poisson_kernel(0.0, 2.5, 1.0), std::invalid_argument);
}

TEST_CASE("kernel positivity and exponential envelope") {
  for (double y : {0.3, 1.5, 3.0}) {
    for (double x = -6.0; x <= 6.0; x += 0.5)
      CHECK(poisson_kernel(x, y) > 0.0);
  }
  // |P(x,y)| <= |sin y| e^{-|x|+1} / (cosh 1 - 1) for |x| >= 1
  for (double y : {0.3, pi / 2, 2.8, 4.0, 5.5}) {
    for (double x = 1.0; x <= 20.0; x += 0.5) {
      double bound = std::abs(std::sin(y)) * std::exp(-x + 1.0) /
                     (std::cosh(1.0) - 1.0);
      CHECK(std::abs(poisson_kernel(x, y)) <= bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("kernel is harmonic: five-point stencil") {
  double d = 1e-4;
  for (double x : {0.0, 0.7, 2.1}) {
    for (double y : {0.5, 2.0, 4.5}) {
      double lap = (poisson_kernel(x + d, y) + poisson_kernel(x - d, y) +
                    poisson_kernel(x, y + d) + poisson_kernel(x, y - d) -
                    4.0 * poisson_kernel(x, y)) /
                   (d * d);
      CHECK(std::abs(lap) < 1e-5);
    }
  }
}

TEST_CASE("analytic partials match finite differences") {
  double d = 1e-6;
  for (double x : {0.3, 1.7}) {
    for (double y : {0.9, 2.4}) {
      double fx = (poisson_kernel(x + d, y) - poisson_kernel(x - d, y)) / (2 * d);
      double fy = (poisson_kernel(x, y + d) - poisson_kernel(x, y - d)) / (2 * d);
      CHECK(poisson_kernel_dx(x, y) == doctest::Approx(fx).epsilon(1e-6));
      CHECK(poisson_kernel_dy(x, y) == doctest::Approx(fy).epsilon(1e-6));
    }
  }
}

TEST_CASE("half-line mass identity") {
  // int_0^inf P(x,y) dx = pi - y
  QuadConfig qc;
  for (double y : {0.3, pi / 2, 2.8}) {
    DecayEnvelope env{std::abs(std::sin(y)) * std::exp(1.0) /
                          (std::cosh(1.0) - 1.0),
                      1.0, 1.0};
    double v = integrate_ray_decaying_real(
        [y](double x) { return poisson_kernel(x, y); }, env, qc);
    CHECK(std::abs(v - (pi - y)) < 1e-6);
  }
}

TEST_CASE("transform of constants and of |t|") {
  double v = poisson_transform([](double) { return 1.0; }, 1.0, 0.0, 0.7, 1.0,
                               2.0);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-6));

  v = poisson_transform([](double) { return 0.0; }, 1.0, 0.0, 0.0, 1.0, 2.0);
  CHECK(v == 0.0);

  v = poisson_transform([](double t) { return std::abs(t); }, 1.0, 1e-6, 10.0,
                        pi / 2, pi);
  CHECK(std::abs(v - 5.0) < 1e-2);
}

TEST_CASE("weighted transform sandwich") {
  // P_h{omega} >= (omega(x)/2)(1 - y/h) and
  // P_h{omega} <= (omega(2x) + omega(2h/pi))(1 - y/h) + C
  QuadConfig qc;
  for (const Weight& w : {Weight::power(0.5), Weight::linear()}) {
    for (double h : {1.0, pi}) {
      double C = std::exp(1.0) / (2.0 * h * (std::cosh(1.0) - 1.0)) *
                 integrate_ray_decaying_real(
                     [&](double t) { return std::exp(-pi * t / (2.0 * h)) * w(t); },
                     DecayEnvelope{growth_coefficient(w, pi / (4.0 * h)),
                                   pi / (4.0 * h), 0.0},
                     qc);
      for (int i = 0; i < 10; ++i) {
        double x = 8.0 * i / 9.0;
        for (int j = 1; j <= 6; ++j) {
          double y = h * j / 7.0;
          double v = poisson_transform(w, x, y, h, qc);
          CHECK(v >= (w(x) / 2.0) * (1.0 - y / h) - 1e-8);
          CHECK(v <= (w(2.0 * x) + w(2.0 * h / pi)) * (1.0 - y / h) + C + 1e-8);
        }
      }
    }
  }
}

TEST_CASE("minorant sandwich, dilate mode") {
  AnalyticMinorant F(Weight::power(0.5), 1.0, 1.0, MinorantMode::Dilate);
  for (double x = 0.0; x <= 50.0; x += 5.0) {
    for (double y : {-0.9, 0.0, 0.9}) {
      double logF = F.U(x, y);
      CHECK(logF >= F.lower_log_bound(x) - 1e-6);
      CHECK(logF <= F.log_bound_constant() + F.upper_log_bound(x) + 1e-6);
    }
  }
}

TEST_CASE("minorant sandwich, subadditive mode") {
  AnalyticMinorant F(Weight::linear(), 1.0, pi, MinorantMode::Subadditive);
  CHECK(F.U(10.0, 0.0) >= 10.0);
  CHECK(eval_minorant_modulus(F, complex(10.0, 0.0)) >= std::exp(10.0));
  double v0 = F.U(0.0, 0.0);
  CHECK(v0 >= -1e-9);
  CHECK(v0 <= F.log_bound_constant() + 1e-9);
  double v5 = F.U(5.0, 0.0);
  CHECK(v5 >= 5.0 - 1e-9);
  CHECK(v5 <= F.log_bound_constant() + 20.0 + 1e-9);
  CHECK_THROWS_AS(F.modulus(complex(0.0, 4.0)), std::invalid_argument);
}

TEST_CASE("minorant preconditions") {
  CHECK_THROWS_AS(
      AnalyticMinorant(Weight::power(2.0), 1.0, 1.0, MinorantMode::Subadditive),
      std::invalid_argument);
  AnalyticMinorant z(Weight::zero(), 1.0, 1.0, MinorantMode::Dilate);
  CHECK(eval_minorant_modulus(z, complex(3.0, 0.2)) == doctest::Approx(1.0));
}

TEST_CASE("harmonic conjugate path independence") {
  AnalyticMinorant F(Weight::linear(), 1.0, pi, MinorantMode::Subadditive);
  CHECK(harmonic_conjugate_path(F, complex(0.0, 0.0)) == 0.0);
  complex z(1.0, 0.5);
  double a = harmonic_conjugate_path(F, z);
  double b = harmonic_conjugate_path_alt(F, z);
  CHECK(std::abs(a - b) < 1e-5);
}

TEST_CASE("cauchy-riemann residual of the minorant") {
  AnalyticMinorant F(Weight::power(0.5), 1.0, 1.0, MinorantMode::Dilate);
  double d = 1e-4;
  for (double x : {0.5, 2.0}) {
    for (double y : {-0.3, 0.4}) {
      double Vy = (harmonic_conjugate_path(F, complex(x, y + d)) -
                   harmonic_conjugate_path(F, complex(x, y - d))) /
                  (2 * d);
      double Vx = (harmonic_conjugate_path(F, complex(x + d, y)) -
                   harmonic_conjugate_path(F, complex(x - d, y))) /
                  (2 * d);
      CHECK(std::abs(F.Ux(x, y) - Vy) < 1e-4);
      CHECK(std::abs(F.Uy(x, y) + Vx) < 1e-4);
    }
  }
}

TEST_CASE("three lines bound") {
  Weight w = Weight::power(2.0);
  double M = std::exp(1.0), C = 1.0;
  double b = three_lines_bound(M, C, w, 1.0, complex(0.0, 0.5));
  CHECK(b == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  CHECK(std::exp(0.25) <= b);
  // y = 0 edge gives C e^{-omega/2}; y = h edge gives M
  CHECK(three_lines_bound(M, C, w, 1.0, complex(0.0, 0.0)) ==
        doctest::Approx(C));
  CHECK(three_lines_bound(M, C, w, 1.0, complex(7.0, 1.0)) ==
        doctest::Approx(M));
  CHECK_THROWS_AS(three_lines_bound(M, C, w, 1.0, complex(0.0, 1.5)),
                  std::invalid_argument);
}
