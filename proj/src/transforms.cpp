#include "striphyp/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace striphyp {

namespace {

using std::numbers::pi;
const complex kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDivergenceSentinel = 1e12;

// sup of a real function over the line with truncation doubling and
// argmax refinement, same scheme as the strip-norm sweep
double line_sup(const std::function<double(double)>& v, int points,
                int doublings) {
  double X = 8.0;
  double sup = 0.0, arg = 0.0;
  auto sweep = [&](double x0, double x1, int m) {
    for (int i = 0; i <= m; ++i) {
      double x = x0 + (x1 - x0) * i / m;
      double val = v(x);
      if (std::isnan(val)) continue;
      if (val > sup) {
        sup = val;
        arg = x;
      }
    }
  };
  int n = std::max(points, 64);
  sweep(-X, X, n);
  for (int d = 0; d < 2 + doublings; ++d) {
    double prev = sup;
    X *= 2.0;
    sweep(-X, -X / 2.0, n / 2);
    sweep(X / 2.0, X, n / 2);
    if (sup > kDivergenceSentinel) return kInf;
    if (sup <= prev * (1.0 + 1e-12)) break;
  }
  if (sup > kDivergenceSentinel) return kInf;
  double dx = 2.0 * X / n;
  for (int level = 0; level < 8; ++level) {
    sweep(arg - dx, arg + dx, 32);
    dx /= 5.0;
  }
  return sup;
}

}  // namespace

complex fourier_strip(const TestFunction& phi, double k, double xi,
                      const QuadConfig& cfg) {
  double h = phi.strip_half_width();
  if (k <= 0.0 || k >= h)
    throw std::invalid_argument("fourier_strip: need 0 < k < strip half-width");
  if (phi.form() == TestFunction::Form::Zero) return 0.0;
  double y = xi >= 0.0 ? -k : k;
  auto env = phi.line_envelope(y);
  if (!env)
    throw std::invalid_argument("fourier_strip: no decay certificate on the line");
  DecayEnvelope e = *env;
  e.coef *= std::exp(-k * std::abs(xi));
  QuadConfig qc = cfg;
  qc.osc_freq = std::abs(xi);
  return integrate_line_decaying(
      [&](double x) {
        complex z(x, y);
        return phi(z) * std::exp(-kI * z * xi);
      },
      e, qc);
}

complex inverse_fourier_line(const LineFunction& psi, double x,
                             const QuadConfig& cfg) {
  if (!psi.decay)
    throw std::invalid_argument("inverse_fourier_line: no decay tag");
  QuadConfig qc = cfg;
  qc.osc_freq = std::abs(x);
  return integrate_line_decaying(
             [&](double xi) { return psi.f(xi) * std::exp(kI * x * xi); },
             *psi.decay, qc) /
         (2.0 * pi);
}

K1Norms k1_norms(const LineFunction& psi, const Weight& w, double h,
                 double lambda, const QuadConfig& cfg) {
  K1Norms out;
  out.rho_h = line_sup(
      [&](double xi) { return std::abs(psi.f(xi)) * std::exp(h * std::abs(xi)); },
      400, 3);
  out.rho_omega = line_sup(
      [&](double x) {
        return std::abs(inverse_fourier_line(psi, x, cfg)) * std::exp(w(lambda * x));
      },
      200, 3);
  out.rho_combined = std::max(out.rho_omega, out.rho_h);
  return out;
}

complex laplace_transform(const AnalyticRep& F, complex zeta,
                          const ContourSpec& contour, const QuadConfig& cfg) {
  std::vector<std::pair<double, double>> J = contour.intervals;
  if (J.empty()) {
    if (F.functional() && F.functional()->density())
      throw std::invalid_argument(
          "laplace_transform: density functional needs explicit intervals");
    std::vector<double> pts = F.support_points();
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());
    // pad each support point and merge overlaps
    for (double p : pts) {
      if (!J.empty() && p - 1.0 <= J.back().second)
        J.back().second = p + 1.0;
      else
        J.push_back({p - 1.0, p + 1.0});
    }
  }
  double b = contour.k;
  QuadConfig qc = cfg;
  qc.osc_freq = std::abs(zeta.real());
  complex total = 0.0;
  for (const auto& Ji : J) {
    Rect rect{Ji.first, Ji.second, -b, b};
    total += contour_integral_rect(
        [&](complex z) { return F(z) * std::exp(kI * z * zeta); }, rect, qc);
  }
  return -total / (2.0 * pi);
}

ConditionVerdict paley_wiener_check(const std::function<complex(complex)>& G,
                                    const LaplaceBoundSpec& spec,
                                    const GridConfig& cfg) {
  ConditionVerdict v;
  double eta_min = spec.region == PWRegion::AboveLambda
                       ? spec.lambda * (1.0 + 1e-6)
                       : 1e-3;
  auto weighted = [&](double xi, double eta) {
    double mag = std::abs(G(complex(xi, eta)));
    double log_damp = (spec.a + spec.epsilon) * std::abs(eta) +
                      (spec.h + spec.epsilon) * std::abs(xi);
    if (spec.lambda > 0.0)
      log_damp += spec.lambda * young_conjugate(spec.w, eta / spec.lambda);
    return mag * std::exp(-log_damp);
  };
  double sup = 0.0, wxi = 0.0, weta = 0.0;
  double eta_max = 16.0;
  double prev = -1.0;
  bool stable = false;
  for (int d = 0; d < 8 && !stable; ++d) {
    sup = 0.0;
    int nxi = 41, neta = 40;
    double Xi = std::min(cfg.t_max, 2.0 * eta_max);
    for (int i = 0; i < nxi; ++i) {
      double xi = -Xi + 2.0 * Xi * i / (nxi - 1);
      for (int j = 0; j < neta; ++j) {
        double eta = eta_min * std::pow(eta_max / eta_min,
                                        (double)j / (neta - 1));
        double val = weighted(xi, eta);
        if (spec.region == PWRegion::Entire) {
          double val2 = weighted(xi, -eta);
          if (val2 > val) {
            val = val2;
            eta = -eta;
          }
        }
        if (val > sup) {
          sup = val;
          wxi = xi;
          weta = eta;
        }
      }
    }
    if (prev >= 0.0 && sup <= prev * (1.0 + 1e-9)) stable = true;
    prev = sup;
    eta_max *= 4.0;
    if (eta_max > 1e3 && !stable) break;
  }
  v.witness["sup"] = sup;
  v.witness["xi"] = wxi;
  v.witness["eta"] = weta;
  if (!std::isfinite(sup) || (!stable && sup > 1e6)) {
    v.status = ConditionVerdict::Status::Fails;
  } else if (stable) {
    v.status = ConditionVerdict::Status::Holds;
  } else {
    v.status = ConditionVerdict::Status::NumericallySupported;
  }
  return v;
}

}  // namespace striphyp
