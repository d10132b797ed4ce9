#include "striphyp/stripharmonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace striphyp {

namespace {

using std::numbers::pi;

// property (C) constant e / (cosh 1 - 1)
const double kKernelCoef = std::exp(1.0) / (std::cosh(1.0) - 1.0);

}  // namespace

double poisson_kernel(double x, double y) {
  if (y <= 0.0 || y >= 2.0 * pi)
    throw std::invalid_argument("poisson_kernel: y outside (0, 2pi)");
  return std::sin(y) / (std::cosh(x) - std::cos(y));
}

double poisson_kernel(double x, double y, double h) {
  if (h <= 0.0) throw std::invalid_argument("poisson_kernel: h must be > 0");
  return poisson_kernel(pi * x / h, pi * y / h);
}

double poisson_kernel_dx(double x, double y) {
  double d = std::cosh(x) - std::cos(y);
  return -std::sin(y) * std::sinh(x) / (d * d);
}

double poisson_kernel_dy(double x, double y) {
  double d = std::cosh(x) - std::cos(y);
  return (std::cos(y) * std::cosh(x) - 1.0) / (d * d);
}

double poisson_transform(const std::function<double(double)>& f, double coef,
                         double rate, double x, double y, double h,
                         const QuadConfig& cfg) {
  if (y <= 0.0 || y >= 2.0 * h)
    throw std::invalid_argument("poisson_transform: y outside (0, 2h)");
  if (rate >= pi / h)
    throw std::invalid_argument(
        "poisson_transform: growth rate exceeds kernel decay pi/h");
  // integrand in u = t - x; far-field bound from property (C):
  // |P_h(u, y) f(x+u)| <= K coef e^{rate|x|} e^{-(pi/h - rate)|u|}
  DecayEnvelope env;
  env.rate = pi / h - rate;
  env.coef = kKernelCoef * coef * std::exp(rate * std::abs(x)) / (2.0 * h);
  env.start = h / pi;
  QuadConfig qc = cfg;
  complex val = integrate_line_decaying(
      [&](double u) {
        return complex(poisson_kernel(u, y, h) * f(x + u) / (2.0 * h), 0.0);
      },
      env, qc);
  return val.real();
}

double poisson_transform(const Weight& w, double x, double y, double h,
                         const QuadConfig& cfg) {
  double crit = w.crit_rate();
  if (std::isnan(crit) || crit >= pi / h)
    throw std::invalid_argument(
        "poisson_transform: (epsilon)_{pi/h} not certified for this weight");
  double rate = 0.5 * (crit + pi / h);
  return poisson_transform([&w](double t) { return w(t); },
                           growth_coefficient(w, rate), rate, x, y, h, cfg);
}

// ---------------------------------------------------------------------------

AnalyticMinorant::AnalyticMinorant(Weight w, double lambda, double h,
                                   MinorantMode mode)
    : w_(std::move(w)), lambda_(lambda), h_(h), mode_(mode) {
  if (lambda <= 0.0 || h <= 0.0)
    throw std::invalid_argument("minorant: lambda and h must be > 0");
  double mu_needed = pi / (8.0 * h * lambda);
  if (mode_ == MinorantMode::Dilate) {
    double crit = w_.crit_rate();
    if (std::isnan(crit) || crit >= mu_needed)
      throw std::invalid_argument(
          "minorant: (epsilon)_{pi/(8 h lambda)} not certified");
    env_rate_ = lambda_ * 0.5 * (crit + mu_needed);  // rate for g(t)=omega(lambda t)
    env_coef_ = growth_coefficient(w_, env_rate_ / lambda_);
  } else {
    if (!w_.has_tag(WeightCond::Alpha))
      throw std::invalid_argument("minorant: subadditivity tag (alpha) missing");
    // subadditive omega grows at most linearly: omega(t) <= omega(1)(t+1)
    env_rate_ = pi / (16.0 * h);
    env_coef_ = lambda_ * growth_coefficient(w_, env_rate_);
  }
  // bound constant through the proof composition: U <= 4 g(2x) + log C,
  // log C = 4 g(q h / pi) + 4 C', with the upper-bound constant C' of
  // the scaled transform (q = 8 dilate over P_{4h}, q = 4 subadditive)
  QuadConfig qc;
  qc.abs_tol = 1e-10;
  if (w_.kind() == Weight::Kind::Zero) {
    logC_ = 0.0;
    return;
  }
  double q = mode_ == MinorantMode::Dilate ? 8.0 : 4.0;
  double mu = pi / (q * h);
  DecayEnvelope env{env_coef_, mu - env_rate_, 0.0};
  double integral = integrate_ray_decaying_real(
      [&](double t) { return boundary(t) * std::exp(-mu * t); }, env, qc);
  double Cprime =
      std::exp(1.0) / (q / 2.0 * h * (std::cosh(1.0) - 1.0)) * integral;
  logC_ = 4.0 * boundary(q * h / pi) + 4.0 * Cprime;
}

double AnalyticMinorant::boundary(double t) const {
  return mode_ == MinorantMode::Dilate ? w_(lambda_ * t) : lambda_ * w_(t);
}

double AnalyticMinorant::lower_log_bound(double x) const { return boundary(x); }

double AnalyticMinorant::upper_log_bound(double x) const {
  return mode_ == MinorantMode::Dilate ? 4.0 * w_(2.0 * lambda_ * x)
                                       : 4.0 * boundary(x);
}

double AnalyticMinorant::U(double x, double y, const QuadConfig& cfg) const {
  if (w_.kind() == Weight::Kind::Zero) return 0.0;
  double hh = 4.0 * h_;
  double v = y + h_;
  DecayEnvelope env;
  env.rate = pi / hh - env_rate_;
  env.coef = 2.0 * kKernelCoef * env_coef_ *
             std::exp(env_rate_ * std::abs(x)) / (2.0 * hh);
  env.start = hh / pi;
  QuadConfig qc = cfg;
  complex val = integrate_line_decaying(
      [&](double u) {
        return complex(
            poisson_kernel(u, v, hh) * boundary(x + u) / (2.0 * hh), 0.0);
      },
      env, qc);
  return 4.0 * val.real();
}

double AnalyticMinorant::Ux(double x, double y, const QuadConfig& cfg) const {
  if (w_.kind() == Weight::Kind::Zero) return 0.0;
  double hh = 4.0 * h_;
  double v = y + h_;
  double scale = pi / hh;
  DecayEnvelope env;
  env.rate = pi / hh - env_rate_;
  env.coef = 8.0 * scale * kKernelCoef * env_coef_ *
             std::exp(env_rate_ * std::abs(x)) / (2.0 * hh);
  env.start = hh / pi;
  QuadConfig qc = cfg;
  // d/dx P_{4h}(t - x, v) = -scale P_x(scale (t-x), scale v)
  complex val = integrate_line_decaying(
      [&](double u) {
        return complex(-scale * poisson_kernel_dx(scale * u, scale * v) *
                           boundary(x + u) / (2.0 * hh),
                       0.0);
      },
      env, qc);
  return 4.0 * val.real();
}

double AnalyticMinorant::Uy(double x, double y, const QuadConfig& cfg) const {
  if (w_.kind() == Weight::Kind::Zero) return 0.0;
  double hh = 4.0 * h_;
  double v = y + h_;
  double scale = pi / hh;
  DecayEnvelope env;
  env.rate = pi / hh - env_rate_;
  env.coef = 8.0 * scale * kKernelCoef * env_coef_ *
             std::exp(env_rate_ * std::abs(x)) / (2.0 * hh);
  env.start = hh / pi;
  QuadConfig qc = cfg;
  complex val = integrate_line_decaying(
      [&](double u) {
        return complex(scale * poisson_kernel_dy(scale * u, scale * v) *
                           boundary(x + u) / (2.0 * hh),
                       0.0);
      },
      env, qc);
  return 4.0 * val.real();
}

double AnalyticMinorant::modulus(complex z, const QuadConfig& cfg) const {
  if (std::abs(z.imag()) >= h_)
    throw std::invalid_argument("minorant: z outside strip");
  return std::exp(U(z.real(), z.imag(), cfg));
}

AnalyticMinorant build_minorant(const Weight& w, double lambda, double h,
                                MinorantMode mode) {
  return AnalyticMinorant(w, lambda, h, mode);
}

double eval_minorant_modulus(const AnalyticMinorant& F, complex z) {
  return F.modulus(z);
}

double harmonic_conjugate_path(const AnalyticMinorant& F, complex z,
                               const QuadConfig& cfg) {
  if (std::abs(z.imag()) >= F.half_width())
    throw std::invalid_argument("harmonic_conjugate_path: path leaves strip");
  if (F.weight().kind() == Weight::Kind::Zero) return 0.0;
  double x = z.real(), y = z.imag();
  // V_x = -U_y, V_y = U_x along (0,0) -> (x,0) -> (x,y)
  QuadConfig qc = cfg;
  double leg1 = integrate_adaptive_real(
      [&](double t) { return -F.Uy(t, 0.0, qc); }, 0.0, x, qc);
  double leg2 = integrate_adaptive_real(
      [&](double s) { return F.Ux(x, s, qc); }, 0.0, y, qc);
  return leg1 + leg2;
}

double harmonic_conjugate_path_alt(const AnalyticMinorant& F, complex z,
                                   const QuadConfig& cfg) {
  if (std::abs(z.imag()) >= F.half_width())
    throw std::invalid_argument("harmonic_conjugate_path: path leaves strip");
  if (F.weight().kind() == Weight::Kind::Zero) return 0.0;
  double x = z.real(), y = z.imag();
  QuadConfig qc = cfg;
  double leg1 = integrate_adaptive_real(
      [&](double s) { return F.Ux(0.0, s, qc); }, 0.0, y, qc);
  double leg2 = integrate_adaptive_real(
      [&](double t) { return -F.Uy(t, y, qc); }, 0.0, x, qc);
  return leg1 + leg2;
}

double three_lines_bound(double M, double C, const Weight& w, double h,
                         complex z) {
  double y = z.imag();
  if (y < 0.0 || y > h)
    throw std::invalid_argument("three_lines_bound: z outside closed half-strip");
  if (M <= 0.0 || C <= 0.0)
    throw std::invalid_argument("three_lines_bound: M, C must be > 0");
  double frac = y / h;
  return std::pow(M, frac) * std::pow(C, 1.0 - frac) *
         std::exp(-0.5 * w(z.real()) * (1.0 - frac));
}

}  // namespace striphyp
