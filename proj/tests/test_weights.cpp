#include <doctest.h>

#include <cmath>
#include <vector>

#include "striphyp/weights.hpp"

using namespace striphyp;

namespace {

std::vector<Weight> catalog() {
  return {Weight::zero(),       Weight::power(0.5),  Weight::power(2.0),
          Weight::linear(),     Weight::log1p_weight(), Weight::twosqrt(),
          Weight::exp_weight(), Weight::explog(0.5, 1.0),
          Weight::expoverlog(2.0)};
}

}  // namespace

TEST_CASE("evaluation basics") {
  CHECK(Weight::linear()(0.0) == 0.0);
  CHECK(Weight::power(0.5)(4.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(Weight::exp_weight()(1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  // even extension
  CHECK(Weight::power(2.0)(-3.0) == Weight::power(2.0)(3.0));
}

TEST_CASE("monotone on a grid, all catalog entries") {
  for (const Weight& w : catalog()) {
    double prev = -1.0;
    for (int i = 0; i < 1000; ++i) {
      double t = w.safe_t_max() * i / 999.0;
      double v = w(t);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("condition verdicts") {
  ConditionVerdict v = check_condition(Weight::power(2.0), WeightCond::Alpha);
  CHECK(v.fails());
  // the witness pair must actually violate subadditivity
  double t1 = v.witness.at("t1"), t2 = v.witness.at("t2");
  Weight p2 = Weight::power(2.0);
  CHECK(p2(t1 + t2) > p2(t1) + p2(t2));

  v = check_condition(Weight::linear(), WeightCond::Delta);
  CHECK(v.holds());
  CHECK(v.witness.at("A") == doctest::Approx(1.0));
  CHECK(v.witness.at("H") == doctest::Approx(2.0));

  v = check_condition_epsilon(Weight::exp_weight(), 2.0);
  CHECK(v.holds());
  CHECK(v.witness.at("integral") == doctest::Approx(1.0).epsilon(1e-8));

  CHECK(check_condition(Weight::exp_weight(), WeightCond::Epsilon0).fails());
  CHECK(check_condition(Weight::exp_weight(), WeightCond::EpsilonInf).holds());
  CHECK(check_condition(Weight::power(0.5), WeightCond::Epsilon0).holds());
  CHECK(check_condition(Weight::log1p_weight(), WeightCond::Gamma0).fails());
  CHECK(check_condition(Weight::power(0.5), WeightCond::NA).holds());
  CHECK_THROWS_AS(check_condition_epsilon(Weight::linear(), -1.0),
                  std::invalid_argument);
}

TEST_CASE("weight growth beyond the epsilon rate") {
  // any weight with a finite epsilon integral at mu is o(e^{nu t}) for
  // nu > mu: the damped values decrease past a threshold
  Weight e = Weight::exp_weight();
  double nu = 1.5;
  double prev = 1e300;
  bool decreasing_tail = true;
  for (double t = 64.0; t <= 512.0; t *= 2.0) {
    double v = std::exp(e.log_eval(t) - nu * t);
    if (v > prev) decreasing_tail = false;
    prev = v;
  }
  CHECK(decreasing_tail);
}

TEST_CASE("comparison relations") {
  WeightRelations r = compare_weights(Weight::power(2.0), Weight::linear());
  CHECK(r.subset);
  CHECK(r.prec);
  CHECK(!r.equivalent);

  // prec demands every dilation factor, which identical linearly
  // growing weights do not satisfy at small lambda; subset and the
  // equivalences are reflexive
  r = compare_weights(Weight::linear(), Weight::linear());
  CHECK(r.subset);
  CHECK(r.equivalent);
  CHECK(r.star_equivalent);

  r = compare_weights(Weight::linear(), Weight::power(2.0));
  CHECK(r.none());
}

TEST_CASE("convex majorant with (delta)") {
  Weight z = majorize_with_delta(Weight::zero());
  CHECK(z(5.0) == 0.0);

  Weight s = majorize_with_delta(Weight::power(0.5));
  CHECK(s(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  for (double t = 0.0; t <= 100.0; t += 1.0)
    CHECK(s(t) >= std::sqrt(t) - 1e-9);
  // convexity gives the (delta) inequality with A = 1
  for (double t = 0.5; t <= 50.0; t *= 1.7)
    CHECK(2.0 * s(t) <= s(2.0 * t) + s(0.0) + 1e-9);
}

TEST_CASE("zeta surgery") {
  Weight s = add_zeta(Weight::power(0.5));
  for (double t = 0.25; t <= 1e4; t *= 1.5) {
    CHECK(s(t) <= 2.0 * std::sqrt(t) + 1e-9);
    CHECK(s(t) >= std::sqrt(t) - 1e-9);
  }
  // sigma(2t) - sigma(t) grows without bound
  double prev = -1.0;
  bool grew = true;
  for (double t = 16.0; t <= 65536.0; t *= 4.0) {
    double gap = s(2.0 * t) - s(t);
    if (gap < prev) grew = false;
    prev = gap;
  }
  CHECK(grew);
  CHECK(prev > 10.0);

  CHECK_THROWS_AS(add_zeta(Weight::log1p_weight()), std::invalid_argument);
}

TEST_CASE("dilate-dominating surgery") {
  Weight s = dominate_all_dilates(Weight::power(0.5));
  Weight base = Weight::power(0.5);
  // sigma / omega(10 t) strictly increasing along powers of ten
  double r3 = s(1e3) / base(1e4);
  double r4 = s(1e4) / base(1e5);
  double r5 = s(1e5) / base(1e6);
  CHECK(r3 < r4);
  CHECK(r4 < r5);

  CHECK_THROWS_AS(dominate_all_dilates(Weight::exp_weight()),
                  std::invalid_argument);

  Weight z = dominate_all_dilates(Weight::zero());
  CHECK(z(100.0) == 0.0);
}

TEST_CASE("young conjugate") {
  CHECK(young_conjugate(Weight::zero(), 1.0) == 0.0);
  CHECK(young_conjugate(Weight::twosqrt(), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(young_conjugate(Weight::power(0.5), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-8));
  CHECK_THROWS_AS(young_conjugate(Weight::linear(), 0.5),
                  std::invalid_argument);
}

TEST_CASE("fenchel inequality on a grid") {
  for (const Weight& w : {Weight::twosqrt(), Weight::power(0.5)}) {
    for (int i = 1; i <= 20; ++i) {
      double sv = 0.1 * i;
      double conj = young_conjugate(w, sv);
      for (int j = 0; j <= 20; ++j) {
        double t = j * 2.5;
        CHECK(conj + t * sv >= w(t) - 1e-8);
      }
    }
  }
}

TEST_CASE("inverse derivative") {
  CHECK(inverse_derivative(Weight::twosqrt(), 1.0) == doctest::Approx(1.0));
  CHECK(inverse_derivative(Weight::twosqrt(), 2.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(inverse_derivative(Weight::linear(), 1.0),
                  std::invalid_argument);

  // omega*(s) = omega(H(s)) - s H(s), and t omega'(t) <= omega(t)
  for (const Weight& w : {Weight::twosqrt(), Weight::power(0.5)}) {
    for (double sv = 0.1; sv <= 10.0; sv *= 1.4) {
      double Hs = inverse_derivative(w, sv);
      CHECK(std::abs(young_conjugate(w, sv) - (w(Hs) - sv * Hs)) < 1e-6);
    }
    for (double t = 0.1; t <= 100.0; t *= 1.7)
      CHECK(t * w.derivative(t) <= w(t) + 1e-10);
  }
}

TEST_CASE("growth coefficient caps the damped sup") {
  double c = growth_coefficient(Weight::linear(), 0.5);
  // sup t e^{-t/2} = 2/e
  CHECK(c == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-3));
  for (double t = 0.0; t <= 50.0; t += 0.7)
    CHECK(Weight::linear()(t) * std::exp(-0.5 * t) <= c * (1.0 + 1e-9));
}
