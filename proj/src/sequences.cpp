#include "striphyp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace striphyp {

namespace {

double factorial_log(double s, double p) { return s * std::lgamma(p + 1.0); }

double loglog_log(double s, double r, double p) {
  double pe = p + std::numbers::e;
  return s * std::pow(pe, r) * std::log(std::log(pe));
}

// d/dp of the loglog generator, for cancellation-free quotients at huge p.
double loglog_log_deriv(double s, double r, double p) {
  double pe = p + std::numbers::e;
  double lg = std::log(pe);
  return s * std::pow(pe, r - 1.0) * (r * std::log(lg) + 1.0 / lg);
}

}  // namespace

WeightSequence WeightSequence::factorial_power(double s, int prefix) {
  if (s <= 0.0) throw std::invalid_argument("factorial: s must be > 0");
  WeightSequence w;
  w.gen_ = Generator::FactorialPower;
  w.s_ = s;
  w.log_values_.resize(prefix);
  for (int p = 0; p < prefix; ++p) w.log_values_[p] = factorial_log(s, p);
  return w;
}

WeightSequence WeightSequence::loglog_power(double s, double r, int prefix) {
  if (s <= 0.0 || r <= 0.0)
    throw std::invalid_argument("loglog: s and r must be > 0");
  WeightSequence w;
  w.gen_ = Generator::LoglogPower;
  w.s_ = s;
  w.r_ = r;
  w.log_values_.resize(prefix);
  for (int p = 0; p < prefix; ++p) w.log_values_[p] = loglog_log(s, r, p);
  return w;
}

WeightSequence WeightSequence::from_values(const std::vector<double>& values) {
  if (values.size() < 2)
    throw std::invalid_argument("explicit sequence needs >= 2 terms");
  WeightSequence w;
  w.log_values_.reserve(values.size());
  for (double v : values) {
    if (v <= 0.0) throw std::invalid_argument("sequence terms must be > 0");
    w.log_values_.push_back(std::log(v));
  }
  return w;
}

double WeightSequence::log_value(double p) const {
  if (p < 0.0) throw std::invalid_argument("log_value: p < 0");
  if (p < (double)log_values_.size()) return log_values_[(size_t)p];
  switch (gen_) {
    case Generator::FactorialPower: return factorial_log(s_, p);
    case Generator::LoglogPower: return loglog_log(s_, r_, p);
    default:
      throw std::out_of_range("sequence prefix exhausted and no generator");
  }
}

double WeightSequence::log_quotient(double p) const {
  if (p < 1.0) throw std::invalid_argument("log_quotient: p < 1");
  // Direct difference loses precision once log M_p dwarfs the step;
  // switch to the analytic derivative at the midpoint there.
  if (p > 1e8 && gen_ == Generator::LoglogPower)
    return loglog_log_deriv(s_, r_, p - 0.5);
  if (p > 1e8 && gen_ == Generator::FactorialPower)
    return s_ * std::log(p);  // lgamma difference = log p exactly
  return log_value(p) - log_value(p - 1.0);
}

std::string WeightSequence::spec() const {
  std::ostringstream os;
  switch (gen_) {
    case Generator::FactorialPower: os << "factorial:s=" << s_; break;
    case Generator::LoglogPower:
      os << "loglog:s=" << s_ << ",r=" << r_;
      break;
    default: os << "explicit[" << log_values_.size() << "]"; break;
  }
  return os.str();
}

double counting_function(const WeightSequence& M, double t) {
  if (t < 0.0) throw std::invalid_argument("counting_function: t < 0");
  if (t == 0.0) return 0.0;
  double logt = std::log(t);
  if (M.log_quotient(1.0) > logt) return 0.0;
  // The count can be astronomically large for slowly growing
  // quotients, so bracket the largest p with log m_p <= log t in
  // log p space, then bisect.
  const double lp_cap = M.has_generator()
                            ? 690.0  // p ~ 1e299
                            : std::log((double)M.prefix_size() - 1.0);
  double lp_lo = 0.0, lp_hi = std::min(1.0, lp_cap);
  while (M.log_quotient(std::exp(lp_hi)) <= logt) {
    lp_lo = lp_hi;
    if (lp_hi >= lp_cap) {
      if (!M.has_generator())
        throw std::out_of_range("counting_function: prefix exhausted");
      return std::exp(lp_cap);  // saturated
    }
    lp_hi = std::min(2.0 * lp_hi, lp_cap);
  }
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lp_lo + lp_hi);
    if (mid == lp_lo || mid == lp_hi) break;
    if (M.log_quotient(std::exp(mid)) <= logt)
      lp_lo = mid;
    else
      lp_hi = mid;
  }
  double p = std::exp(lp_lo);
  if (p < 9e15) {
    // the quotient is a step function of p, so the bisection can land
    // on either side of a jump; verify the integer candidate directly
    double n = std::floor(p + 1e-9);
    auto quot_at = [&](double q) {
      if (!M.has_generator() && q >= (double)M.prefix_size())
        return std::numeric_limits<double>::infinity();
      return M.log_quotient(q);
    };
    while (quot_at(n + 1.0) <= logt) n += 1.0;
    while (n >= 1.0 && quot_at(n) > logt) n -= 1.0;
    return n;
  }
  return p;
}

double associated_function(const WeightSequence& M, double t) {
  if (t < 0.0) throw std::invalid_argument("associated_function: t < 0");
  if (t == 0.0) return 0.0;
  // By log-convexity the sup over p of p log t + log M_0 - log M_p is
  // attained at p* = m(t).
  double p = counting_function(M, t);
  return p * std::log(t) + M.log_value(0.0) - M.log_value(p);
}

double associated_via_counting(const WeightSequence& M, double t) {
  if (t < 0.0) throw std::invalid_argument("associated_via_counting: t < 0");
  if (t == 0.0) return 0.0;
  double p_star = counting_function(M, t);
  if (p_star > 2e6)
    throw std::runtime_error(
        "associated_via_counting: too many quotient breakpoints");
  double logt = std::log(t);
  double sum = 0.0;
  for (double p = 1.0; p <= p_star; p += 1.0)
    sum += logt - M.log_quotient(p);
  return sum;
}

namespace {

// Tail behavior of sum e^{-mu m_p}: does it converge for all mu,
// some mu (with threshold), or none. Derived from the quotient
// growth of each generator family.
enum class M5Class { All, SomeAboveOne, None, Unknown };

M5Class m5_class(const WeightSequence& M) {
  switch (M.generator()) {
    case WeightSequence::Generator::FactorialPower:
      return M5Class::All;  // m_p = p^s, super-logarithmic
    case WeightSequence::Generator::LoglogPower:
      if (M.gen_r() > 1.0) return M5Class::All;    // m_p superpolynomial
      if (M.gen_s() > 1.0) return M5Class::All;    // m_p ~ (log p)^s, s>1
      if (M.gen_s() == 1.0) return M5Class::SomeAboveOne;  // m_p ~ log p
      return M5Class::None;                        // m_p = o(log p)
    default: return M5Class::Unknown;
  }
}

}  // namespace

TailClass seq_tail_class(const WeightSequence& M) {
  switch (m5_class(M)) {
    case M5Class::All: return TailClass::ConvergesAll;
    case M5Class::SomeAboveOne: return TailClass::ConvergesAboveOne;
    case M5Class::None: return TailClass::Diverges;
    default: return TailClass::Unknown;
  }
}

namespace {

double m5_partial_sum(const WeightSequence& M, double mu, int P) {
  double sum = 0.0;
  for (int p = 1; p < P; ++p) sum += std::exp(-mu * std::exp(M.log_quotient(p)));
  return sum;
}

}  // namespace

ConditionVerdict check_seq_condition_m5(const WeightSequence& M, double mu) {
  if (mu <= 0.0) throw std::invalid_argument("(M.5): mu must be > 0");
  ConditionVerdict v;
  const int P = std::min(M.prefix_size(), 4096);
  double partial = m5_partial_sum(M, mu, P);
  v.witness["mu"] = mu;
  v.witness["partial_sum"] = partial;
  v.evidence_range = P;
  switch (m5_class(M)) {
    case M5Class::All: v.status = ConditionVerdict::Status::Holds; break;
    case M5Class::SomeAboveOne:
      v.status = mu > 1.0 ? ConditionVerdict::Status::Holds
                          : ConditionVerdict::Status::Fails;
      if (v.fails())
        v.witness["partial_sum_growth"] =
            partial - m5_partial_sum(M, mu, P / 2);
      break;
    case M5Class::None:
      v.status = ConditionVerdict::Status::Fails;
      v.witness["partial_sum_growth"] = partial - m5_partial_sum(M, mu, P / 2);
      break;
    default:
      v.status = ConditionVerdict::Status::NumericallySupported;
      break;
  }
  return v;
}

ConditionVerdict check_seq_condition(const WeightSequence& M,
                                     SeqCondition cond) {
  if (M.prefix_size() < 8)
    throw std::invalid_argument("check_seq_condition: prefix too short");
  ConditionVerdict v;
  const int P = M.prefix_size();
  switch (cond) {
    case SeqCondition::LogConvex: {
      for (int p = 2; p < P; ++p) {
        if (M.log_quotient(p) < M.log_quotient(p - 1) - 1e-12) {
          v.status = ConditionVerdict::Status::Fails;
          v.witness["p"] = p;
          v.evidence_range = P;
          return v;
        }
      }
      v.status = M.has_generator() ? ConditionVerdict::Status::Holds
                                   : ConditionVerdict::Status::NumericallySupported;
      v.evidence_range = P;
      return v;
    }
    case SeqCondition::M2: {
      // Witness search: H in powers of two, A = exp(max gap), with a
      // stability check on a doubled index range through the generator.
      int half = P / 2;
      for (double H = 2.0; H <= 1024.0; H *= 2.0) {
        double logH = std::log(H);
        double gap = -1e300, gap_big = -1e300;
        for (int p = 0; p <= half; ++p)
          for (int q = p; q <= half; ++q) {
            double g = M.log_value(p + q) - (p + q) * logH - M.log_value(p) -
                       M.log_value(q);
            gap = std::max(gap, g);
          }
        bool stable = true;
        if (M.has_generator()) {
          for (int p = 0; p <= 2 * half; p += 2)
            for (int q = p; q <= 2 * half; q += 2) {
              double g = M.log_value(p + q) - (p + q) * logH -
                         M.log_value(p) - M.log_value(q);
              gap_big = std::max(gap_big, g);
            }
          stable = gap_big <= gap + 1e-9;
        }
        if (stable) {
          v.status = M.has_generator()
                         ? ConditionVerdict::Status::Holds
                         : ConditionVerdict::Status::NumericallySupported;
          v.witness["H"] = H;
          v.witness["A"] = std::exp(std::max(gap, 0.0));
          v.evidence_range = M.has_generator() ? 2 * half : half;
          return v;
        }
      }
      v.status = ConditionVerdict::Status::NumericallySupported;
      v.evidence_range = half;
      return v;
    }
    case SeqCondition::M5_0: {
      ConditionVerdict small = check_seq_condition_m5(M, 0.5);
      ConditionVerdict tiny = check_seq_condition_m5(M, 1.0 / 64.0);
      if (small.holds() && tiny.holds()) return tiny;
      if (small.fails()) return small;
      if (tiny.fails()) return tiny;
      v.status = ConditionVerdict::Status::NumericallySupported;
      return v;
    }
    case SeqCondition::M5_Inf: {
      ConditionVerdict big = check_seq_condition_m5(M, 2.0);
      if (big.holds()) return big;
      if (m5_class(M) == M5Class::None) {
        big.status = ConditionVerdict::Status::Fails;
        return big;
      }
      v.status = ConditionVerdict::Status::NumericallySupported;
      return v;
    }
  }
  return v;
}

const char* to_string(Nontriviality n) {
  switch (n) {
    case Nontriviality::BeurlingAndRoumieu: return "BeurlingAndRoumieu";
    case Nontriviality::RoumieuOnly: return "RoumieuOnly";
    default: return "Trivial";
  }
}

NontrivialityReport nontriviality_classify(const WeightSequence& M) {
  // r_p(h) = p log log p - p log h - log M_p; bounded in p for
  // all h / some h / no h decides the label.
  const int P = std::min(std::max(M.prefix_size(), 64), 10000);
  std::vector<double> hs;
  for (int i = 0; i < 24; ++i)
    hs.push_back(std::pow(10.0, -3.0 + 6.0 * i / 23.0));

  auto r_p = [&](double p, double h) {
    return p * std::log(std::log(p)) - p * std::log(h) - M.log_value(p);
  };

  double prefix_sup = -1e300;
  int bounded_count = 0;
  for (double h : hs) {
    double sup_half = -1e300, sup_full = -1e300;
    for (int p = 2; p <= P; ++p) {
      double r = r_p(p, h);
      sup_full = std::max(sup_full, r);
      if (p <= P / 2) sup_half = std::max(sup_half, r);
    }
    prefix_sup = std::max(prefix_sup, sup_full);
    if (sup_full <= sup_half + 1e-9) ++bounded_count;
  }

  NontrivialityReport rep;
  rep.prefix_sup = prefix_sup;

  if (!M.has_generator()) {
    rep.symbolic = false;
    if (bounded_count == (int)hs.size())
      rep.label = Nontriviality::BeurlingAndRoumieu;
    else if (bounded_count > 0)
      rep.label = Nontriviality::RoumieuOnly;
    else
      rep.label = Nontriviality::Trivial;
    return rep;
  }

  rep.symbolic = true;
  // Tail analysis: the limsup of r_p(h)/p equals
  // lim (log log p - log M_p / p) - log h.
  if (M.generator() == WeightSequence::Generator::FactorialPower) {
    // log M_p / p ~ s log p beats log log p: bounded for every h.
    rep.label = Nontriviality::BeurlingAndRoumieu;
    return rep;
  }
  // LoglogPower(s, r): log M_p / p ~ s (p+e)^{r-1} log log p.
  if (M.gen_r() > 1.0 || M.gen_s() > 1.0) {
    rep.label = Nontriviality::BeurlingAndRoumieu;
  } else if (M.gen_s() == 1.0) {
    // r_p(h) ~ -p log h - e log log p: bounded exactly for h >= 1.
    rep.label = Nontriviality::RoumieuOnly;
  } else {
    // (1-s) p log log p dominates: unbounded for every h.
    rep.label = Nontriviality::Trivial;
  }
  return rep;
}

namespace {

// One direction of the sequence comparison: M_p <= C h^p N_p, i.e.
// sup_p (log M_p - p log h - log N_p) < inf, judged per h by sup
// stability between the index ranges [0,P] and [0,4P].
struct DirResult {
  bool some_h = false;  // subset
  bool all_h = false;   // prec
};

DirResult compare_one_way(const WeightSequence& M, const WeightSequence& N) {
  int P = std::min({M.prefix_size(), N.prefix_size(), 2048});
  bool extend = M.has_generator() && N.has_generator();

  auto bounded_for = [&](double h) {
    if (!extend) return true;
    double logh = std::log(h);
    auto g = [&](double p) {
      return M.log_value(p) - p * logh - N.log_value(p);
    };
    // the gap is eventually monotone for generator pairs, so the sup
    // is finite exactly when the far tail is no longer increasing;
    // probing a fixed multiple of the prefix is not deep enough when
    // p log h dominates until log p catches up
    double ga = g(2.5e11), gb = g(5e11), gc = g(1e12);
    return !(gc > gb + 1e-9 && gb > ga + 1e-9);
  };

  DirResult d;
  d.all_h = true;
  for (int k = -10; k <= 10; ++k) {
    bool b = bounded_for(std::pow(2.0, k));
    d.some_h = d.some_h || b;
    d.all_h = d.all_h && b;
  }
  return d;
}

}  // namespace

SeqRelations compare_sequences(const WeightSequence& M,
                               const WeightSequence& N) {
  if (M.prefix_size() < 16 || N.prefix_size() < 16)
    throw std::invalid_argument("compare_sequences: prefixes too short");
  DirResult fwd = compare_one_way(M, N);
  SeqRelations rel;
  rel.subset = fwd.some_h;
  rel.prec = fwd.all_h;
  if (rel.subset) rel.equivalent = compare_one_way(N, M).some_h;
  return rel;
}

}  // namespace striphyp
