#pragma once

#include <functional>

#include "striphyp/quad.hpp"
#include "striphyp/weights.hpp"

namespace striphyp {

/// Poisson kernel of the strip of half-width pi: sin y / (cosh x - cos y),
/// harmonic for 0 < y < 2 pi, positive for 0 < y < pi, even in x.
double poisson_kernel(double x, double y);
/// Scaled kernel P_h(x, y) = P(pi x / h, pi y / h), 0 < y < 2h.
double poisson_kernel(double x, double y, double h);

/// Analytic x and y partials of the base kernel.
double poisson_kernel_dx(double x, double y);
double poisson_kernel_dy(double x, double y);

/// P_h{f; x, y} = (1/2h) integral of P_h(t - x, y) f(t) dt. The growth
/// envelope |f(t)| <= coef e^{rate |t|} must satisfy rate < pi / h for
/// convergence.
double poisson_transform(const std::function<double(double)>& f, double coef,
                         double rate, double x, double y, double h,
                         const QuadConfig& cfg = {});
/// Weight overload; requires (epsilon)_{pi/h} via the critical rate.
double poisson_transform(const Weight& w, double x, double y, double h,
                         const QuadConfig& cfg = {});

enum class MinorantMode { Dilate, Subadditive };

/// Zero-free analytic F = e^{U+iV} on T^h with a certified sandwich:
/// dilate mode      e^{omega(lambda x)} <= |F| <= C e^{4 omega(2 lambda x)},
/// subadditive mode e^{lambda omega(x)} <= |F| <= C e^{4 lambda omega(x)}.
/// U(x,y) = 4 P_{4h}{g; x, y+h} with g the scaled boundary weight.
class AnalyticMinorant {
 public:
  AnalyticMinorant(Weight w, double lambda, double h, MinorantMode mode);

  double U(double x, double y, const QuadConfig& cfg = {}) const;
  double Ux(double x, double y, const QuadConfig& cfg = {}) const;
  double Uy(double x, double y, const QuadConfig& cfg = {}) const;

  /// |F(z)| = e^{U}; throws outside the open strip.
  double modulus(complex z, const QuadConfig& cfg = {}) const;

  /// Boundary data g(t) of the transform.
  double boundary(double t) const;
  /// Certified sandwich in log form: lower(x) <= U <= log C + upper(x).
  double lower_log_bound(double x) const;
  double upper_log_bound(double x) const;
  double log_bound_constant() const { return logC_; }

  double half_width() const { return h_; }
  double lambda() const { return lambda_; }
  MinorantMode mode() const { return mode_; }
  const Weight& weight() const { return w_; }

 private:
  Weight w_;
  double lambda_, h_;
  MinorantMode mode_;
  double logC_ = 0.0;
  double env_coef_ = 1.0, env_rate_ = 0.0;  // growth envelope of g
};

AnalyticMinorant build_minorant(const Weight& w, double lambda, double h,
                                MinorantMode mode);

double eval_minorant_modulus(const AnalyticMinorant& F, complex z);

/// Harmonic conjugate V(z) with V(0,0) = 0, by Cauchy-Riemann path
/// integration along (0,0) -> (x,0) -> (x,y).
double harmonic_conjugate_path(const AnalyticMinorant& F, complex z,
                               const QuadConfig& cfg = {});

/// Same endpoint through the other axis-parallel path
/// (0,0) -> (0,y) -> (x,y); path-independence oracle.
double harmonic_conjugate_path_alt(const AnalyticMinorant& F, complex z,
                                   const QuadConfig& cfg = {});

/// M^{y/h} C^{1-y/h} exp(-(omega(x)/2)(1 - y/h)) for z in the closed
/// upper half-strip.
double three_lines_bound(double M, double C, const Weight& w, double h,
                         complex z);

}  // namespace striphyp
