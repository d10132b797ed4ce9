#include "striphyp/almostanalytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "striphyp/spaces.hpp"

namespace striphyp {

namespace {

using std::numbers::pi;
const complex kI(0.0, 1.0);

}  // namespace

AlmostAnalyticExt::AlmostAnalyticExt(TestFunction phi, Weight w, double k,
                                     double h_norm)
    : phi_(std::move(phi)), w_(std::move(w)), k_(k), h_norm_(h_norm) {}

AlmostAnalyticExt build_extension(const TestFunction& phi, const Weight& w,
                                  double k, double h_norm) {
  if (k <= 0.0) throw std::invalid_argument("build_extension: k must be > 0");
  if (!w.concave_smooth())
    throw std::invalid_argument(
        "build_extension: weight is not smooth strictly concave");
  if (!w.has_tag(WeightCond::NA))
    throw std::invalid_argument("build_extension: weight grows linearly or faster");
  if (h_norm <= 0.0) h_norm = 2.0 * k;
  if (phi.strip_half_width() <= k)
    throw std::invalid_argument("build_extension: phi not analytic past the shift");
  return AlmostAnalyticExt(phi, w, k, h_norm);
}

double AlmostAnalyticExt::H(double eta) const {
  return w_.derivative_inverse(std::abs(eta));
}

double AlmostAnalyticExt::Hprime(double eta) const {
  double e = std::abs(eta);
  double step = std::min(1e-6 * std::max(e, 1e-3), 0.5 * e);
  if (step <= 0.0) return -std::numeric_limits<double>::infinity();
  return (w_.derivative_inverse(e + step) - w_.derivative_inverse(e - step)) /
         (2.0 * step);
}

complex AlmostAnalyticExt::psi(complex zeta, const QuadConfig& cfg) const {
  if (phi_.form() == TestFunction::Form::Zero) return 0.0;
  double xi = zeta.real(), eta = zeta.imag();
  double s = xi >= 0.0 ? -k_ : k_;
  auto g = [&](double x) {
    complex z(x, s);
    return phi_(z) * std::exp(-kI * z * zeta);
  };
  double half = eta == 0.0 ? std::numeric_limits<double>::infinity() : H(eta);
  // truncation: double until the integrand is negligible or the moving
  // endpoint H(eta) is reached
  double scale = std::abs(g(0.0)) + 1.0;
  double X = 8.0;
  while (X < half &&
         std::abs(g(X)) + std::abs(g(-X)) > 1e-16 * scale && X < 1e7)
    X *= 2.0;
  X = std::min(X, half);
  QuadConfig qc = cfg;
  qc.osc_freq = std::abs(xi);
  return integrate_adaptive(g, -X, X, qc);
}

complex AlmostAnalyticExt::dbar(complex zeta, const QuadConfig& cfg) const {
  (void)cfg;
  if (phi_.form() == TestFunction::Form::Zero) return 0.0;
  double xi = zeta.real(), eta = zeta.imag();
  if (eta == 0.0) return 0.0;
  double s = xi >= 0.0 ? -k_ : k_;
  double Hv = H(eta);
  // phi underflows to 0 far out while the exponential overflows; the
  // product is a true 0 there, so test phi first
  auto g = [&](double x) -> complex {
    complex z(x, s);
    if (phi_.modulus(z) == 0.0) return 0.0;
    return phi_(z) * std::exp(-kI * z * zeta);
  };
  // only the endpoints move: dbar = (i/2) d/deta of the truncation
  complex ends = g(Hv) + g(-Hv);
  if (ends == complex(0.0, 0.0)) return 0.0;
  double dH = (eta > 0.0 ? 1.0 : -1.0) * Hprime(eta);
  return 0.5 * kI * dH * ends;
}

complex dbar_extension(const AlmostAnalyticExt& E, complex zeta,
                       const QuadConfig& cfg) {
  return E.dbar(zeta, cfg);
}

namespace {

// coefficient of the bound |Psi| <= C N_sigma e^{-k|xi|}:
// C = 2 int_0^inf e^{omega(t) - sigma(t)} dt, certified by a scanned
// exponential envelope
double extension_constant(const Weight& w, const Weight& sigma,
                          const QuadConfig& qc) {
  const double rate = 0.25;
  double best = -std::numeric_limits<double>::infinity();
  double at = 0.0;
  for (double t = 0.0; t <= 2000.0; t += 0.25) {
    double v = w(t) - sigma(t) + rate * t;
    if (v > best) {
      best = v;
      at = t;
    }
  }
  if (at > 1900.0)
    throw std::invalid_argument(
        "check_extension_bounds: e^{omega - sigma} tail not integrable");
  DecayEnvelope env{std::exp(best), rate, 0.0};
  return 2.0 * integrate_ray_decaying_real(
                   [&](double t) { return std::exp(w(t) - sigma(t)); }, env, qc);
}

}  // namespace

ConditionVerdict check_extension_bounds(const AlmostAnalyticExt& E,
                                        const Weight& sigma,
                                        const GridConfig& cfg) {
  (void)cfg;
  ConditionVerdict v;
  QuadConfig qc;
  qc.abs_tol = 1e-9;
  const Weight& w = E.weight();
  double h = E.norm_half_width();
  SpaceParams pw{w, h, 1.0, Flavor::Beurling, MinorantMode::Dilate};
  SpaceParams ps{sigma, h, 1.0, Flavor::Beurling, MinorantMode::Dilate};
  double n_omega = strip_norm(E.source(), pw);
  double n_sigma = strip_norm(E.source(), ps);
  double C = extension_constant(w, sigma, qc);
  v.witness["C"] = C;
  v.witness["norm_omega"] = n_omega;
  v.witness["norm_sigma"] = n_sigma;
  if (!std::isfinite(n_omega) || !std::isfinite(n_sigma)) {
    v.status = ConditionVerdict::Status::Fails;
    return v;
  }
  const int nxi = 41, neta = 20;
  double worst1 = 0.0, worst2 = 0.0;
  for (int i = 0; i < nxi; ++i) {
    double xi = -20.0 + 40.0 * i / (nxi - 1);
    for (int j = 0; j < neta; ++j) {
      double eta = 5.0 * (j + 1) / neta;
      complex zeta(xi, eta);
      double damp = std::exp(-E.shift() * std::abs(xi));
      double conj = young_conjugate(w, eta);
      double curv = std::abs(-E.Hprime(eta));  // (omega*)'' = -H'
      double lhs1 = std::abs(E.dbar(zeta, qc));
      double rhs1 = n_omega * damp * curv * std::exp(-conj);
      double lhs2 = std::abs(E.psi(zeta, qc));
      double rhs2 = C * n_sigma * damp;
      double r1 = lhs1 - rhs1 * (1.0 + 1e-9);
      double r2 = lhs2 - rhs2 * (1.0 + 1e-9);
      if (r1 > worst1) {
        worst1 = r1;
        v.witness["xi1"] = xi;
        v.witness["eta1"] = eta;
      }
      if (r2 > worst2) {
        worst2 = r2;
        v.witness["xi2"] = xi;
        v.witness["eta2"] = eta;
      }
    }
  }
  v.evidence_range = 20.0;
  if (worst1 > 1e-9 * n_omega || worst2 > 1e-9 * n_sigma) {
    v.status = ConditionVerdict::Status::Fails;
    v.witness["excess1"] = worst1;
    v.witness["excess2"] = worst2;
  } else {
    v.status = ConditionVerdict::Status::Holds;
  }
  return v;
}

complex stokes_boundary_pair(const std::function<complex(complex)>& G,
                             const AlmostAnalyticExt& E, double L,
                             const QuadConfig& cfg) {
  if (L <= 0.0)
    throw std::invalid_argument("stokes_boundary_pair: L must be > 0");
  QuadConfig qc = cfg;
  // psi values carry their own quadrature noise; do not demand more
  qc.abs_tol = std::max(qc.abs_tol, 1e-8);
  double k = E.shift();
  // generous line envelope from the e^{-k|xi|} decay of Psi
  auto line_env = [&](const std::function<complex(double)>& f) {
    double m = 0.0;
    for (double x = -10.0; x <= 10.0; x += 1.0) m = std::max(m, std::abs(f(x)));
    return DecayEnvelope{(m + 1.0) * std::exp(10.0 * k) * 4.0, k, 10.0};
  };
  auto top = [&](double xi) {
    complex zeta(xi, L);
    return G(zeta) * E.psi(zeta, qc);
  };
  complex term1 = integrate_line_decaying(top, line_env(top), qc);
  // fixed panels in v: the inner line integrals carry quadrature noise
  // an adaptive outer rule would chase forever
  auto inner = [&](double v) {
    auto row = [&](double xi) {
      complex zeta(xi, v);
      return G(zeta) * E.dbar(zeta, qc);
    };
    return integrate_line_decaying(row, line_env(row), qc);
  };
  complex term2 = 0.0;
  const int panels = 8;
  for (int i = 0; i < panels; ++i) {
    double a = L * i / panels, b = L * (i + 1) / panels;
    term2 += integrate_panel(inner, std::max(a, 1e-9), b, 24);
  }
  // the contour branch switches at xi = 0, so the extension jumps
  // across the seam {xi = 0, v > 0} by the two vertical contour
  // segments at +-H(v); the jump is e^{-omega*(v)}-sized, the same
  // scale as dbar, and Green's identity applied on each half strip
  // leaves this line term behind
  auto seam = [&](double v) {
    complex left = E.psi(complex(-1e-12, v), qc);
    complex right = E.psi(complex(1e-12, v), qc);
    return G(complex(0.0, v)) * (left - right);
  };
  complex term3 = 0.0;
  for (int i = 0; i < panels; ++i) {
    double a = L * i / panels, b = L * (i + 1) / panels;
    term3 += integrate_panel(seam, std::max(a, 1e-9), b, 24);
  }
  return term1 + 2.0 * kI * term2 - kI * term3;
}

complex direct_boundary_pair(const std::function<complex(complex)>& G,
                             const AlmostAnalyticExt& E, double eta,
                             const QuadConfig& cfg) {
  QuadConfig qc = cfg;
  qc.abs_tol = std::max(qc.abs_tol, 1e-8);
  double k = E.shift();
  auto f = [&](double xi) {
    complex zeta(xi, eta);
    return G(zeta) * E.psi(zeta, qc);
  };
  double m = 0.0;
  for (double x = -10.0; x <= 10.0; x += 1.0) m = std::max(m, std::abs(f(x)));
  DecayEnvelope env{(m + 1.0) * std::exp(10.0 * k) * 4.0, k, 10.0};
  return integrate_line_decaying(f, env, qc);
}

}  // namespace striphyp
