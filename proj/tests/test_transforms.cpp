#include <doctest.h>

#include <cmath>
#include <numbers>

#include "striphyp/transforms.hpp"

using namespace striphyp;
using std::numbers::pi;

namespace {

const complex I(0.0, 1.0);

LineFunction gauss_hat() {
  return {[](double xi) {
            return complex(std::sqrt(pi) * std::exp(-xi * xi / 4.0), 0.0);
          },
          DecayEnvelope{8.0, 0.5, 4.0}};
}

}  // namespace

TEST_CASE("fourier transform of gaussians") {
  TestFunction g = TestFunction::gaussian(1.0);
  CHECK(std::abs(fourier_strip(g, 0.5, 0.0) - complex(std::sqrt(pi), 0.0)) <
        1e-9);
  CHECK(std::abs(fourier_strip(g, 0.5, 2.0) -
                 complex(std::sqrt(pi) * std::exp(-1.0), 0.0)) < 1e-9);
  CHECK(std::abs(fourier_strip(TestFunction::zero(), 0.5, 1.0)) == 0.0);
  // contour independence of the shift height
  CHECK(std::abs(fourier_strip(g, 0.25, 3.0) - fourier_strip(g, 1.5, 3.0)) <
        1e-7);
}

TEST_CASE("inverse fourier transform") {
  CHECK(std::abs(inverse_fourier_line(gauss_hat(), 0.0) - complex(1.0, 0.0)) <
        1e-6);
  LineFunction zero{[](double) { return complex(0.0, 0.0); },
                    DecayEnvelope{1.0, 1.0, 0.0}};
  CHECK(std::abs(inverse_fourier_line(zero, 1.0)) == 0.0);
  CHECK_THROWS_AS(
      inverse_fourier_line({[](double) { return complex(1.0, 0.0); }, {}}, 0.0),
      std::invalid_argument);
}

TEST_CASE("round trip through the shifted gaussian") {
  TestFunction g = TestFunction::gaussian(1.0, complex(1.0, 0.0));
  LineFunction psi{[&](double xi) { return fourier_strip(g, 0.5, xi); },
                   DecayEnvelope{8.0, 0.5, 4.0}};
  CHECK(std::abs(inverse_fourier_line(psi, 1.0) - complex(1.0, 0.0)) < 1e-6);
  CHECK(std::abs(inverse_fourier_line(psi, 0.0) - g(complex(0.0, 0.0))) < 1e-6);
}

TEST_CASE("k1 norms of the gaussian image") {
  K1Norms n = k1_norms(gauss_hat(), Weight::linear(), 1.0, 1.0);
  // sup e^{-xi^2/4 + |xi|} at xi = 2 and sup e^{-x^2 + |x|} at 1/2
  CHECK(n.rho_h ==
        doctest::Approx(std::sqrt(pi) * std::exp(1.0)).epsilon(1e-5));
  CHECK(n.rho_omega == doctest::Approx(std::exp(0.25)).epsilon(1e-5));
  CHECK(n.rho_combined == doctest::Approx(n.rho_h));

  LineFunction zero{[](double) { return complex(0.0, 0.0); },
                    DecayEnvelope{1.0, 1.0, 0.0}};
  K1Norms z = k1_norms(zero, Weight::linear(), 1.0, 1.0);
  CHECK(z.rho_h == 0.0);
  CHECK(z.rho_omega == 0.0);
  CHECK(z.rho_combined == 0.0);
}

TEST_CASE("laplace transform of point masses") {
  ContourSpec c;
  c.k = 0.5;
  auto F0 = cauchy_represent(Functional::delta(0.0), nullptr, 0.1, 10.0);
  for (complex zeta : {complex(0.0, 1.0), complex(2.0, 3.0), complex(-1.0, 0.5)})
    CHECK(std::abs(laplace_transform(F0, zeta, c) -
                   complex(1.0 / (2.0 * pi), 0.0)) < 1e-8);

  auto F1 = cauchy_represent(Functional::delta(1.0), nullptr, 0.1, 10.0);
  CHECK(std::abs(laplace_transform(F1, I, c) -
                 std::exp(complex(0.0, 1.0) * I) / (2.0 * pi)) < 1e-8);

  auto Fz = cauchy_represent(Functional(), nullptr, 0.1, 10.0);
  CHECK(std::abs(laplace_transform(Fz, I, c)) == 0.0);
}

TEST_CASE("laplace boundary values match the inverse fourier data") {
  // for f = delta_a the laplace image is e^{i a zeta}/2pi, whose
  // boundary value on R is the inverse fourier transform of e^{i a xi}
  auto F = cauchy_represent(Functional::delta(1.0, 1), nullptr, 0.1, 10.0);
  ContourSpec c;
  c.k = 0.5;
  for (double xi : {-2.0, 0.0, 1.5}) {
    complex low = laplace_transform(F, complex(xi, 1e-6), c);
    complex want = complex(0.0, xi) * std::exp(complex(0.0, xi)) / (2.0 * pi);
    CHECK(std::abs(low - want) < 1e-5);
  }
}

TEST_CASE("paley-wiener verdicts") {
  LaplaceBoundSpec spec;
  spec.a = 0.0;
  spec.h = 0.0;
  spec.region = PWRegion::UpperHalfPlane;

  auto decaying = [](complex z) { return std::exp(I * z) / (2.0 * pi); };
  CHECK(paley_wiener_check(decaying, spec).holds());

  auto growing = [](complex z) { return std::exp(-2.0 * I * z) / (2.0 * pi); };
  ConditionVerdict v = paley_wiener_check(growing, spec);
  CHECK(v.fails());
  CHECK(v.witness.count("eta") == 1);

  auto zero = [](complex) { return complex(0.0, 0.0); };
  CHECK(paley_wiener_check(zero, spec).holds());
}

TEST_CASE("paley-wiener with a conjugate budget") {
  // |G| = e^{omega*(eta)} is exactly matched by the lambda omega*(eta/lambda)
  // term at lambda = 1
  LaplaceBoundSpec spec;
  spec.a = 0.0;
  spec.h = 0.0;
  spec.lambda = 1.0;
  spec.w = Weight::twosqrt();
  spec.region = PWRegion::UpperHalfPlane;
  auto G = [](complex z) {
    // omega* of 2 sqrt t is 1/s
    return complex(std::exp(1.0 / z.imag()), 0.0);
  };
  CHECK(!paley_wiener_check(G, spec).fails());

  auto G2 = [](complex z) {
    return complex(std::exp(2.0 / z.imag()), 0.0);
  };
  CHECK(paley_wiener_check(G2, spec).fails());
}
