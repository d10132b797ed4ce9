#include <doctest.h>

#include <cmath>

#include "striphyp/sequences.hpp"

using namespace striphyp;

TEST_CASE("associated function of p!") {
  WeightSequence M = WeightSequence::factorial_power(1.0);
  CHECK(associated_function(M, 1.0) == 0.0);
  CHECK(associated_function(M, 2.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(associated_function(M, 3.0) ==
        doctest::Approx(std::log(4.5)).epsilon(1e-12));
  CHECK(associated_function(M, 0.0) == 0.0);
}

TEST_CASE("counting function") {
  WeightSequence M = WeightSequence::factorial_power(1.0);
  CHECK(counting_function(M, 0.5) == 0.0);
  CHECK(counting_function(M, 3.5) == 3.0);
  WeightSequence M2 = WeightSequence::factorial_power(2.0);
  CHECK(counting_function(M2, 2.5) == 1.0);
}

TEST_CASE("integral form agrees with the sup form") {
  WeightSequence M = WeightSequence::factorial_power(1.0);
  CHECK(associated_via_counting(M, 3.0) ==
        doctest::Approx(std::log(2.0) + 2.0 * std::log(1.5)).epsilon(1e-9));
  CHECK(associated_via_counting(M, 1.0) == 0.0);
  WeightSequence M2 = WeightSequence::factorial_power(2.0);
  CHECK(associated_via_counting(M2, 4.0) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-9));

  // loglog quotients grow like log p, so large t would need
  // astronomically many breakpoints in the integral form
  std::pair<WeightSequence, double> cases[] = {
      {WeightSequence::factorial_power(1.0), 50.0},
      {WeightSequence::factorial_power(2.0), 50.0},
      {WeightSequence::loglog_power(1.0, 1.0), 4.0}};
  for (const auto& [S, tmax] : cases) {
    for (int i = 1; i <= 1000; ++i) {
      double t = tmax * i / 1000.0;
      CHECK(std::abs(associated_function(S, t) - associated_via_counting(S, t)) <
            1e-9);
    }
  }
}

TEST_CASE("associated function is zero then strictly increasing") {
  WeightSequence M = WeightSequence::factorial_power(1.0);
  CHECK(associated_function(M, 0.9) == 0.0);
  double prev = associated_function(M, 1.1);
  for (double t = 1.6; t <= 40.0; t += 0.5) {
    double v = associated_function(M, t);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sequence conditions") {
  WeightSequence M = WeightSequence::factorial_power(1.0);
  ConditionVerdict v = check_seq_condition(M, SeqCondition::M2);
  CHECK(v.holds());
  CHECK(v.witness.at("H") <= 2.0 + 1e-12);

  CHECK(check_seq_condition(WeightSequence::loglog_power(1.0, 1.0),
                            SeqCondition::M5_0)
            .fails());
  CHECK(check_seq_condition(WeightSequence::loglog_power(1.0, 1.0),
                            SeqCondition::M5_Inf)
            .holds());
  CHECK(check_seq_condition(WeightSequence::factorial_power(0.5),
                            SeqCondition::LogConvex)
            .holds());
  CHECK(check_seq_condition(WeightSequence::factorial_power(1.0),
                            SeqCondition::M5_0)
            .holds());
}

TEST_CASE("non-triviality classifier") {
  CHECK(nontriviality_classify(WeightSequence::factorial_power(1.0)).label ==
        Nontriviality::BeurlingAndRoumieu);
  CHECK(nontriviality_classify(WeightSequence::factorial_power(0.5)).label ==
        Nontriviality::BeurlingAndRoumieu);
  CHECK(nontriviality_classify(WeightSequence::factorial_power(2.0)).label ==
        Nontriviality::BeurlingAndRoumieu);
  CHECK(nontriviality_classify(WeightSequence::loglog_power(1.0, 2.0)).label ==
        Nontriviality::BeurlingAndRoumieu);
  CHECK(nontriviality_classify(WeightSequence::loglog_power(1.0, 1.0)).label ==
        Nontriviality::RoumieuOnly);
  CHECK(nontriviality_classify(WeightSequence::loglog_power(0.5, 1.0)).label ==
        Nontriviality::Trivial);
}

TEST_CASE("sequence comparison") {
  WeightSequence f1 = WeightSequence::factorial_power(1.0);
  WeightSequence f2 = WeightSequence::factorial_power(2.0);

  SeqRelations r = compare_sequences(f1, f2);
  CHECK(r.subset);
  CHECK(r.prec);
  CHECK(!r.equivalent);

  // as with weights, prec is not reflexive: h < 1 fails for equal
  // sequences, while subset and equivalence are symmetric
  r = compare_sequences(f1, f1);
  CHECK(r.subset);
  CHECK(r.equivalent);

  r = compare_sequences(f2, f1);
  CHECK(!r.subset);
  CHECK(!r.prec);
  CHECK(!r.equivalent);
}

TEST_CASE("tail class from the generator") {
  CHECK(seq_tail_class(WeightSequence::factorial_power(1.0)) ==
        TailClass::ConvergesAll);
  CHECK(seq_tail_class(WeightSequence::loglog_power(1.0, 1.0)) ==
        TailClass::ConvergesAboveOne);
}

TEST_CASE("explicit sequences") {
  WeightSequence e = WeightSequence::from_values(
      {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800,
       479001600, 6227020800.0, 87178291200.0, 1307674368000.0});
  CHECK(e.log_value(4) == doctest::Approx(std::log(24.0)));
  CHECK(associated_function(e, 2.0) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS(e.log_value(1000));
}
