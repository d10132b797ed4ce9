#include <doctest.h>

#include <cmath>

#include "striphyp/specparse.hpp"

using namespace striphyp;

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == complex(1.5, 0.0));
  CHECK(parse_complex("2i") == complex(0.0, 2.0));
  CHECK(parse_complex("1+2i") == complex(1.0, 2.0));
  CHECK(parse_complex("-0.5-0.25i") == complex(-0.5, -0.25));
  CHECK(parse_complex("1e-3+2e-3i") == complex(1e-3, 2e-3));
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
}

TEST_CASE("weight specs") {
  CHECK(parse_weight("power:s=0.5")(4.0) == doctest::Approx(2.0));
  CHECK(parse_weight("linear")(3.0) == 3.0);
  CHECK(parse_weight("twosqrt")(4.0) == doctest::Approx(4.0));
  CHECK(parse_weight("zero")(7.0) == 0.0);
  CHECK(parse_weight("exp")(1.0) == doctest::Approx(std::exp(1.0)));
  Weight a = parse_weight("assoc:factorial:s=1");
  CHECK(a(2.0) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(parse_weight("power"), ParseError);
  CHECK_THROWS_AS(parse_weight("nosuch"), ParseError);
}

TEST_CASE("sequence specs") {
  WeightSequence M = parse_sequence("factorial:s=1");
  CHECK(M.log_value(4) == doctest::Approx(std::log(24.0)));
  WeightSequence L = parse_sequence("loglog:s=1,r=2");
  CHECK(L.has_generator());
  WeightSequence E = parse_sequence("explicit:[1,1,2,6,24,120,720,5040,40320,362880,3628800,39916800,479001600,6227020800,87178291200,1307674368000]");
  CHECK(E.prefix_size() == 16);
  CHECK_THROWS_AS(parse_sequence("factorial"), ParseError);
}

TEST_CASE("test function specs") {
  TestFunction g = parse_test_function("gaussian:a=1");
  CHECK(std::abs(g(complex(0.0, 0.0)) - complex(1.0, 0.0)) == 0.0);
  TestFunction gs = parse_test_function("gaussian:a=1,shift=1+0i,coef=2");
  CHECK(std::abs(gs(complex(1.0, 0.0)) - complex(2.0, 0.0)) < 1e-14);
  CHECK(parse_test_function("zero").form() == TestFunction::Form::Zero);
  TestFunction r = parse_test_function("recip:power:s=0.5");
  CHECK(r.form() == TestFunction::Form::Recip);
  TestFunction p = parse_test_function("product:gaussian:a=1;gaussian:a=0.5");
  CHECK(p.form() == TestFunction::Form::Product);
  CHECK_THROWS_AS(parse_test_function("gaussian:b=1"), ParseError);
}

TEST_CASE("functional specs") {
  Functional f = parse_functional("atoms:[(0+0i,0,1)]");
  REQUIRE(f.atoms().size() == 1);
  CHECK(f.atoms()[0].order == 0);

  Functional two = parse_functional("atoms:[(1+0i,2,0.5),(-1+0i,0,2i)]");
  REQUIRE(two.atoms().size() == 2);
  CHECK(two.atoms()[1].coefficient == complex(0.0, 2.0));

  Functional d = parse_functional("density:gauss_decay");
  CHECK(d.density().has_value());
  Functional e = parse_functional("density:exp_decay(2)");
  CHECK(e.density().has_value());
  CHECK(e.density()->rate == doctest::Approx(2.0));

  Functional both = parse_functional("atoms:[(0+0i,0,1)];density:gauss_decay");
  CHECK(both.atoms().size() == 1);
  CHECK(both.density().has_value());

  CHECK_THROWS_AS(parse_functional("atoms:[(0,0)]"), ParseError);
  CHECK_THROWS_AS(parse_functional("density:nosuch"), ParseError);
}

TEST_CASE("condition names") {
  CHECK(parse_weight_cond("alpha") == WeightCond::Alpha);
  CHECK(parse_weight_cond("epsilon0") == WeightCond::Epsilon0);
  CHECK(parse_weight_cond("na") == WeightCond::NA);
  CHECK(parse_seq_cond("m2") == SeqCondition::M2);
  CHECK(parse_seq_cond("logconvex") == SeqCondition::LogConvex);
  CHECK_THROWS_AS(parse_weight_cond("nosuch"), ParseError);
  CHECK_THROWS_AS(parse_seq_cond("nosuch"), ParseError);
}
