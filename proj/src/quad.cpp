#include "striphyp/quad.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace striphyp {

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

complex integrate_panel(const std::function<complex(double)>& f, double a,
                        double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  complex sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

namespace {

complex adapt(const std::function<complex(double)>& f, double a, double b,
              complex whole, double tol, int depth, const QuadConfig& cfg,
              long& fuel) {
  const double mid = 0.5 * (a + b);
  complex left = integrate_panel(f, a, mid, cfg.panel_order);
  complex right = integrate_panel(f, mid, b, cfg.panel_order);
  complex refined = left + right;
  // minimum depth guards against false convergence on panels whose
  // Gauss nodes happen to straddle a peak symmetrically; the fuel
  // budget stops noise-chasing when the integrand is itself a
  // quadrature result
  fuel -= 2;
  if (depth >= cfg.max_depth || fuel <= 0 ||
      (depth >= 2 && std::abs(refined - whole) < tol))
    return refined;
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1, cfg, fuel) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1, cfg, fuel);
}

}  // namespace

complex integrate_adaptive(const std::function<complex(double)>& f, double a,
                           double b, const QuadConfig& cfg) {
  if (a == b) return 0.0;
  // Pre-split so each starting panel resolves any oscillatory factor.
  double max_width = b - a;
  if (cfg.osc_freq > 0.0)
    max_width = std::min(max_width, std::numbers::pi / cfg.osc_freq);
  int n_panels = std::max(1, (int)std::ceil((b - a) / max_width));
  complex total = 0.0;
  double tol = std::max(cfg.abs_tol, 0.0) / n_panels;
  long fuel = 40000;
  for (int i = 0; i < n_panels; ++i) {
    double pa = a + (b - a) * i / n_panels;
    double pb = a + (b - a) * (i + 1) / n_panels;
    complex est = integrate_panel(f, pa, pb, cfg.panel_order);
    total += adapt(f, pa, pb, est, tol, 0, cfg, fuel);
  }
  return total;
}

double integrate_adaptive_real(const std::function<double(double)>& f, double a,
                               double b, const QuadConfig& cfg) {
  return integrate_adaptive([&f](double t) { return complex(f(t), 0.0); }, a, b,
                            cfg)
      .real();
}

complex integrate_line_decaying(const std::function<complex(double)>& f,
                                const DecayEnvelope& env,
                                const QuadConfig& cfg) {
  double radius = cfg.initial_radius;
  int doublings = 0;
  while (env.tail_beyond(radius) >= 0.1 * cfg.abs_tol) {
    radius *= 2.0;
    if (++doublings > cfg.max_doublings)
      throw std::runtime_error("integrate_line_decaying: truncation exhausted");
  }
  // dyadic segments: the integrand mass concentrates near the origin,
  // so panels shrink toward it
  std::vector<double> cuts{0.0};
  for (double c = 1.0; c < radius; c *= 2.0) cuts.push_back(c);
  cuts.push_back(radius);
  QuadConfig seg = cfg;
  seg.abs_tol = cfg.abs_tol / (2.0 * cuts.size());
  complex total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate_adaptive(f, cuts[i], cuts[i + 1], seg);
    total += integrate_adaptive(f, -cuts[i + 1], -cuts[i], seg);
  }
  return total;
}

complex integrate_ray_decaying(const std::function<complex(double)>& f,
                               const DecayEnvelope& env,
                               const QuadConfig& cfg) {
  double radius = cfg.initial_radius;
  int doublings = 0;
  while (env.tail_beyond(radius) >= 0.1 * cfg.abs_tol) {
    radius *= 2.0;
    if (++doublings > cfg.max_doublings)
      throw std::runtime_error("integrate_ray_decaying: truncation exhausted");
  }
  std::vector<double> cuts{0.0};
  for (double c = 1.0; c < radius; c *= 2.0) cuts.push_back(c);
  cuts.push_back(radius);
  QuadConfig seg = cfg;
  seg.abs_tol = cfg.abs_tol / cuts.size();
  complex total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate_adaptive(f, cuts[i], cuts[i + 1], seg);
  return total;
}

double integrate_ray_decaying_real(const std::function<double(double)>& f,
                                   const DecayEnvelope& env,
                                   const QuadConfig& cfg) {
  return integrate_ray_decaying([&f](double t) { return complex(f(t), 0.0); },
                                env, cfg)
      .real();
}

complex contour_integral_rect(const std::function<complex(complex)>& f,
                              const Rect& rect, const QuadConfig& cfg) {
  const complex I(0.0, 1.0);
  // bottom: left to right, dz = dt
  complex bottom = integrate_adaptive(
      [&](double t) { return f(complex(t, rect.y0)); }, rect.x0, rect.x1, cfg);
  // right: bottom to top, dz = i dt
  complex right =
      I * integrate_adaptive([&](double t) { return f(complex(rect.x1, t)); },
                             rect.y0, rect.y1, cfg);
  // top: right to left, dz = -dt
  complex top = -integrate_adaptive(
      [&](double t) { return f(complex(t, rect.y1)); }, rect.x0, rect.x1, cfg);
  // left: top to bottom, dz = -i dt
  complex left =
      -I * integrate_adaptive([&](double t) { return f(complex(rect.x0, t)); },
                              rect.y0, rect.y1, cfg);
  return bottom + right + top + left;
}

}  // namespace striphyp
