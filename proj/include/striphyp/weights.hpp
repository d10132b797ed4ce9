#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "striphyp/sequences.hpp"
#include "striphyp/verdict.hpp"

namespace striphyp {

/// Growth conditions on weight functions. Epsilon is the quantified
/// form at a fixed mu; Epsilon0 / EpsilonInf quantify over all / some
/// mu > 0.
enum class WeightCond {
  Gamma0,      // omega(t) / log t -> infinity
  Delta,       // 2 omega(t) <= omega(Ht) + log A
  Epsilon,     // integral omega(t) e^{-mu t} dt finite, fixed mu
  Epsilon0,    // the above for every mu > 0
  EpsilonInf,  // the above for some mu > 0
  Alpha,       // subadditivity
  Gamma,       // omega(t) >= c log(1+t) + a
  NA,          // omega(t) = o(t)
  Zeta,        // omega(lambda t) - omega(t) -> infinity for lambda > 1
};

const char* to_string(WeightCond c);

/// Non-decreasing weight function on [0, infinity), even-extended to
/// the real line. Catalog entries carry symbolic condition knowledge
/// (tags and anti-tags) so verdicts can be exact; derived entries from
/// the surgery constructions inherit what the construction preserves.
class Weight {
 public:
  enum class Kind {
    Zero,
    Power,       // t^s
    ExpLog,      // exp(t^s log^r(1+t))
    ExpOverLog,  // exp(t / log^s(e+t))
    Exp,         // e^t
    Linear,      // t
    Log1p,       // log(1+t)
    TwoSqrt,     // 2 sqrt(t)
    Assoc,       // associated function of a weight sequence
    Derived,     // closure-backed surgery output
  };

  static Weight zero();
  static Weight power(double s);
  static Weight explog(double s, double r);
  static Weight expoverlog(double s);
  static Weight exp_weight();
  static Weight linear();
  static Weight log1p_weight();
  static Weight twosqrt();
  static Weight assoc(WeightSequence seq);
  /// crit_rate: infimum of mu with finite epsilon integral (0 for
  /// subexponential growth, infinity when none works, NaN unknown).
  static Weight derived(std::string spec, std::function<double(double)> fn,
                        std::set<WeightCond> tags,
                        std::set<WeightCond> anti_tags, double crit_rate);

  /// omega(|t|).
  double operator()(double t) const;

  /// log omega(|t|), computed without overflow for the exponential
  /// catalog entries (-infinity where omega vanishes).
  double log_eval(double t) const;

  Kind kind() const { return kind_; }
  double param_s() const { return s_; }
  double param_r() const { return r_; }
  const WeightSequence* sequence() const { return seq_.get(); }
  std::string spec() const { return spec_; }

  bool has_tag(WeightCond c) const { return tags_.count(c) > 0; }
  bool has_anti_tag(WeightCond c) const { return anti_tags_.count(c) > 0; }
  double crit_rate() const { return crit_rate_; }

  /// Largest t with omega(t) below the overflow guard, capped.
  double safe_t_max(double cap = 1e6) const;

  /// Smooth strictly concave entries expose omega' and its inverse H.
  bool concave_smooth() const;
  double derivative(double t) const;
  double derivative_inverse(double s) const;  // H(s): omega'(H(s)) = s
  std::optional<double> conjugate_closed(double s) const;

 private:
  Weight() = default;
  Kind kind_ = Kind::Zero;
  double s_ = 0.0, r_ = 0.0;
  std::shared_ptr<const WeightSequence> seq_;
  std::function<double(double)> fn_;
  std::set<WeightCond> tags_, anti_tags_;
  double crit_rate_ = 0.0;
  std::string spec_;
};

double eval_weight(const Weight& w, double t);

ConditionVerdict check_condition(const Weight& w, WeightCond cond,
                                 const GridConfig& cfg = {});
/// Epsilon at fixed mu; the witness carries the integral value when
/// the verdict is Holds.
ConditionVerdict check_condition_epsilon(const Weight& w, double mu,
                                         const GridConfig& cfg = {});

struct WeightRelations {
  bool subset = false;
  bool prec = false;
  bool equivalent = false;
  bool star_equivalent = false;
  bool none() const { return !subset && !prec && !equivalent && !star_equivalent; }
};

/// Relations of w against s in the paper's reversed-order sense:
/// subset means s(t) <= w(lambda t) + C for some lambda, prec for
/// every lambda in the test grid.
WeightRelations compare_weights(const Weight& w, const Weight& s,
                                const GridConfig& cfg = {});

/// sigma(t) = integral of omega over [0, t+1]; convex majorant with
/// (delta).
Weight majorize_with_delta(const Weight& w);

/// sigma = omega + n log t piecewise, with minimal thresholds t_n
/// where omega(t) >= n log t from t_n on; satisfies (zeta) and
/// sigma <= 2 omega.
Weight add_zeta(const Weight& w, const GridConfig& cfg = {});

/// sigma(t) = n omega(n t) piecewise with tail-integral thresholds;
/// grows faster than every dilate omega(lambda t).
Weight dominate_all_dilates(const Weight& w);

/// sup_t omega(t) e^{-rate t}; finite for rate above the critical
/// rate, used as a truncation envelope coefficient.
double growth_coefficient(const Weight& w, double rate);

/// omega*(s) = sup_{t>=0} (omega(t) - t s).
double young_conjugate(const Weight& w, double s);

/// H(s) = (omega')^{-1}(s) for smooth strictly concave entries.
double inverse_derivative(const Weight& w, double s);

}  // namespace striphyp
