#pragma once

#include <optional>
#include <string>
#include <vector>

#include "striphyp/verdict.hpp"

namespace striphyp {

/// Log-convex positive sequence M_p, stored as log-values. A finite
/// prefix is always materialized; a generator rule, when present,
/// extends evaluation to arbitrary p (needed for tail analysis).
class WeightSequence {
 public:
  enum class Generator { None, FactorialPower, LoglogPower };

  static WeightSequence factorial_power(double s, int prefix = 256);
  static WeightSequence loglog_power(double s, double r, int prefix = 256);
  static WeightSequence from_values(const std::vector<double>& values);

  /// log M_p. Integer p; beyond the stored prefix the generator rule
  /// is used (throws without one). p may exceed 2^53 for generator
  /// sequences, hence the double argument.
  double log_value(double p) const;
  /// log m_p = log M_p - log M_{p-1}, p >= 1.
  double log_quotient(double p) const;

  int prefix_size() const { return (int)log_values_.size(); }
  bool has_generator() const { return gen_ != Generator::None; }
  Generator generator() const { return gen_; }
  double gen_s() const { return s_; }
  double gen_r() const { return r_; }
  std::string spec() const;

 private:
  WeightSequence() = default;
  Generator gen_ = Generator::None;
  double s_ = 0.0, r_ = 0.0;
  std::vector<double> log_values_;  // p = 0 .. prefix-1
};

enum class SeqCondition { LogConvex, M2, M5_0, M5_Inf };

double associated_function(const WeightSequence& M, double t);

/// m(t) = #{p >= 1 : m_p <= t}; returned as double because the count
/// can exceed integer range for slowly growing quotient sequences.
double counting_function(const WeightSequence& M, double t);

/// Integral form of the associated function, evaluated exactly as a
/// sum of logs over quotient breakpoints. Cross-oracle for
/// associated_function.
double associated_via_counting(const WeightSequence& M, double t);

ConditionVerdict check_seq_condition(const WeightSequence& M,
                                     SeqCondition cond);
/// Quantified (M.5) at a fixed mu > 0.
ConditionVerdict check_seq_condition_m5(const WeightSequence& M, double mu);

/// Convergence class of the tail sum e^{-mu m_p}, derived from the
/// generator rule: for all mu / exactly for mu > 1 / for no mu.
enum class TailClass { ConvergesAll, ConvergesAboveOne, Diverges, Unknown };
TailClass seq_tail_class(const WeightSequence& M);

enum class Nontriviality { BeurlingAndRoumieu, RoumieuOnly, Trivial };

struct NontrivialityReport {
  Nontriviality label;
  bool symbolic;        // generator-backed tail analysis available
  double prefix_sup;    // max over h-grid of sup_{2<=p<=P} r_p(h)
};

NontrivialityReport nontriviality_classify(const WeightSequence& M);

const char* to_string(Nontriviality n);

struct SeqRelations {
  bool subset = false;
  bool prec = false;
  bool equivalent = false;
};

SeqRelations compare_sequences(const WeightSequence& M,
                               const WeightSequence& N);

}  // namespace striphyp
