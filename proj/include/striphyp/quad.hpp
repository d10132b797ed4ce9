#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace striphyp {

using complex = std::complex<double>;

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 20;
  double initial_radius = 8.0;  // truncation start for infinite domains
  int max_doublings = 24;
  int panel_order = 16;  // Gauss-Legendre nodes per panel
  double osc_freq = 0.0; // cap panel width at pi/osc_freq when > 0
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1].
/// Computed once per order by Newton iteration and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// |f(t)| <= coef * exp(-rate * |t|) for |t| >= start.
struct DecayEnvelope {
  double coef = 1.0;
  double rate = 1.0;
  double start = 0.0;
  double tail_beyond(double radius) const {
    double r = std::max(radius, start);
    return coef * std::exp(-rate * r) / rate;
  }
};

complex integrate_panel(const std::function<complex(double)>& f, double a,
                        double b, int order);

/// Adaptive dyadic bisection with per-panel Gauss-Legendre estimates.
/// Deterministic: panels are processed left to right.
complex integrate_adaptive(const std::function<complex(double)>& f, double a,
                           double b, const QuadConfig& cfg);

double integrate_adaptive_real(const std::function<double(double)>& f, double a,
                               double b, const QuadConfig& cfg);

/// Integral over the whole real line of an eventually exponentially
/// decaying integrand; truncation radius doubled until the envelope
/// tail bound drops below 0.1 * abs_tol.
complex integrate_line_decaying(const std::function<complex(double)>& f,
                                const DecayEnvelope& env,
                                const QuadConfig& cfg);

/// Same over the ray [0, infinity).
complex integrate_ray_decaying(const std::function<complex(double)>& f,
                               const DecayEnvelope& env, const QuadConfig& cfg);

double integrate_ray_decaying_real(const std::function<double(double)>& f,
                                   const DecayEnvelope& env,
                                   const QuadConfig& cfg);

struct Rect {
  double x0, x1;  // left, right
  double y0, y1;  // bottom, top
};

/// Counterclockwise contour integral of f over the rectangle boundary:
/// bottom edge left-to-right, right edge up, top edge right-to-left,
/// left edge down.
complex contour_integral_rect(const std::function<complex(complex)>& f,
                              const Rect& rect, const QuadConfig& cfg);

}  // namespace striphyp
