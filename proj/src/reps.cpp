#include "striphyp/reps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace striphyp {

namespace {

using std::numbers::pi;
const complex kI(0.0, 1.0);

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Functional Functional::delta(complex location, int order, complex coefficient) {
  Functional f;
  f.add_atom({location, order, coefficient});
  return f;
}

Functional& Functional::add_atom(Atom a) {
  if (a.order < 0) throw std::invalid_argument("atom order must be >= 0");
  atoms_.push_back(a);
  return *this;
}

Functional& Functional::set_density(LineDensity d) {
  density_ = std::move(d);
  return *this;
}

complex analytic_derivative(const std::function<complex(complex)>& f,
                            complex center, int order, double radius) {
  if (order == 0) return f(center);
  const int n = 64;
  complex sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double th = 2.0 * pi * j / n;
    complex e(std::cos(th), std::sin(th));
    // f(c + r e^{i th}) e^{-i order th}
    sum += f(center + radius * e) *
           complex(std::cos(order * th), -std::sin(order * th));
  }
  return sum * factorial(order) / ((double)n * std::pow(radius, order));
}

complex Functional::apply(const TestFunction& phi, const QuadConfig& cfg) const {
  complex total = 0.0;
  for (const Atom& a : atoms_) {
    double room = phi.strip_half_width();
    double radius = std::isfinite(room)
                        ? 0.4 * std::max(room - std::abs(a.location.imag()), 0.05)
                        : 0.4;
    total += a.coefficient *
             analytic_derivative([&phi](complex z) { return phi(z); },
                                 a.location, a.order, radius);
  }
  if (density_) {
    QuadConfig qc = cfg;
    DecayEnvelope env{density_->coef, density_->rate, 0.0};
    auto phi_env = phi.line_envelope(0.0);
    double phi_coef = phi_env ? phi_env->coef : 1.0;
    env.coef *= std::max(phi_coef, 1.0);
    total += integrate_line_decaying(
        [&](double x) { return density_->d(x) * phi(complex(x, 0.0)); }, env,
        qc);
  }
  return total;
}

// ---------------------------------------------------------------------------

AnalyticRep AnalyticRep::cauchy(Functional f,
                                std::shared_ptr<const AnalyticMinorant> P,
                                double b, double R) {
  for (const Atom& a : f.atoms())
    if (std::abs(a.location.imag()) >= b)
      throw std::invalid_argument("cauchy_represent: atom outside T^b");
  AnalyticRep rep;
  rep.f_ = std::make_shared<Functional>(std::move(f));
  rep.P_ = std::move(P);
  rep.b_ = b;
  rep.R_ = R;
  // derivatives of 1/P at atom locations (z-independent Leibniz part)
  for (const Atom& a : rep.f_->atoms()) {
    std::vector<complex> dv(a.order + 1);
    if (!rep.P_) {
      dv[0] = 1.0;
    } else {
      const AnalyticMinorant& M = *rep.P_;
      double radius =
          0.3 * std::max(M.half_width() - std::abs(a.location.imag()), 0.05);
      auto invP = [&M](complex z) {
        double U = M.U(z.real(), z.imag());
        double V = harmonic_conjugate_path(M, z);
        return std::exp(complex(-U, -V));
      };
      for (int k = 0; k <= a.order; ++k)
        dv[k] = analytic_derivative(invP, a.location, k, radius);
    }
    rep.invP_derivs_.push_back(std::move(dv));
  }
  return rep;
}

AnalyticRep AnalyticRep::entire(std::function<complex(complex)> F) {
  AnalyticRep rep;
  rep.entire_ =
      std::make_shared<std::function<complex(complex)>>(std::move(F));
  return rep;
}

complex AnalyticRep::multiplier_value(complex z) const {
  if (!P_) return 1.0;
  double U = P_->U(z.real(), z.imag());
  double V = harmonic_conjugate_path(*P_, z);
  return std::exp(complex(U, V));
}

complex AnalyticRep::operator()(complex z) const {
  if (entire_) return (*entire_)(z);
  complex inner = 0.0;
  const auto& atoms = f_->atoms();
  for (size_t j = 0; j < atoms.size(); ++j) {
    const Atom& a = atoms[j];
    // d^n/dzeta^n [ (zeta - z)^{-1} / P(zeta) ] at zeta = c, via
    // Leibniz with the closed-form kernel derivatives
    complex term = 0.0;
    for (int k = 0; k <= a.order; ++k) {
      int m = a.order - k;
      complex kernel = std::pow(-1.0, m) * factorial(m) /
                       std::pow(a.location - z, m + 1);
      term += binom(a.order, k) * invP_derivs_[j][k] * kernel;
    }
    inner += a.coefficient * term;
  }
  if (f_->density()) {
    const LineDensity& d = *f_->density();
    QuadConfig qc;
    qc.abs_tol = 1e-11;
    DecayEnvelope env{d.coef * 4.0 / std::max(std::abs(z.imag()), 0.05),
                      d.rate, 0.0};
    const AnalyticMinorant* P = P_.get();
    inner += integrate_line_decaying(
        [&](double t) {
          complex g = d.d(t) / (complex(t, 0.0) - z);
          if (P) {
            double U = P->U(t, 0.0);
            double V = harmonic_conjugate_path(*P, complex(t, 0.0));
            g *= std::exp(complex(-U, -V));
          }
          return g;
        },
        env, qc);
  }
  return multiplier_value(z) * inner / (2.0 * pi * kI);
}

std::vector<double> AnalyticRep::support_points() const {
  std::vector<double> pts;
  if (f_)
    for (const Atom& a : f_->atoms()) pts.push_back(a.location.real());
  return pts;
}

AnalyticRep cauchy_represent(const Functional& f,
                             std::shared_ptr<const AnalyticMinorant> P,
                             double b, double R) {
  return AnalyticRep::cauchy(f, std::move(P), b, R);
}

// ---------------------------------------------------------------------------

namespace {

// truncation radius: doubling until the integrand is negligible on
// both horizontal lines at +-X
double find_truncation(const std::function<complex(complex)>& g, double k,
                       double start, double tol) {
  double X = start;
  for (int i = 0; i < 40; ++i) {
    double m = std::max({std::abs(g(complex(X, k))), std::abs(g(complex(-X, k))),
                         std::abs(g(complex(X, -k))),
                         std::abs(g(complex(-X, -k)))});
    if (m * X < tol) return X;
    X *= 2.0;
  }
  throw std::runtime_error("contour truncation: integrand does not decay");
}

}  // namespace

complex boundary_pair(const AnalyticRep& F, const TestFunction& phi,
                      const ContourSpec& c, const QuadConfig& cfg) {
  if (phi.strip_half_width() <= c.k)
    throw std::invalid_argument("boundary_pair: contour outside phi's strip");
  if (F.functional() && !F.is_entire() && F.inner_height() > c.k)
    throw std::invalid_argument("boundary_pair: contour below inner height");
  auto g = [&](complex z) { return F(z) * phi(z); };
  QuadConfig qc = cfg;
  double X = c.truncation > 0.0
                 ? c.truncation
                 : find_truncation(g, c.k, 8.0, 0.01 * qc.abs_tol);
  Rect rect{-X, X, -c.k, c.k};
  return -contour_integral_rect(g, rect, qc);
}

complex support_pair(const AnalyticRep& F, const TestFunction& phi,
                     const std::vector<std::pair<double, double>>& intervals,
                     double b, const QuadConfig& cfg) {
  for (const auto& J : intervals)
    for (double s : F.support_points())
      if (s == J.first || s == J.second)
        throw std::invalid_argument(
            "support_pair: atom real part on an interval endpoint");
  auto g = [&](complex z) { return F(z) * phi(z); };
  QuadConfig qc = cfg;
  complex total = 0.0;
  for (const auto& J : intervals) {
    Rect rect{J.first, J.second, -b, b};
    total += contour_integral_rect(g, rect, qc);
  }
  return -total;
}

double edge_continuation_check(const AnalyticRep& F,
                               std::shared_ptr<const AnalyticMinorant> P,
                               double L, complex z, const QuadConfig& cfg) {
  if (std::abs(std::abs(z.imag()) - L) < 1e-12)
    throw std::invalid_argument("edge_continuation_check: z on the contour");
  auto invP = [&P](complex zeta) -> complex {
    if (!P) return 1.0;
    double U = P->U(zeta.real(), zeta.imag());
    double V = harmonic_conjugate_path(*P, zeta);
    return std::exp(complex(-U, -V));
  };
  complex Pz = 1.0;
  if (P) {
    double U = P->U(z.real(), z.imag());
    double V = harmonic_conjugate_path(*P, z);
    Pz = std::exp(complex(U, V));
  }
  auto g = [&](complex zeta) { return F(zeta) * invP(zeta) / (zeta - z); };
  QuadConfig qc = cfg;
  qc.abs_tol = std::max(qc.abs_tol, 1e-9);
  complex prev = 0.0;
  double X = 16.0;
  complex rhs = 0.0;
  complex Fz = F(z);
  for (int i = 0; i < 16; ++i) {
    Rect rect{-X, X, -L, L};
    rhs = Pz * contour_integral_rect(g, rect, qc) / (2.0 * pi * kI);
    // stop when doubling the truncation no longer moves the value on
    // the scale of the residual being measured
    double scale = std::abs(Fz) + std::abs(rhs) + 1.0;
    if (i > 0 && std::abs(rhs - prev) < 1e-5 * scale) break;
    prev = rhs;
    X *= 2.0;
    if (X > 1e5) break;
  }
  return std::abs(Fz - rhs);
}

std::pair<Functional, Functional> split_point_masses(const Functional& f,
                                                     double a, double b) {
  if (a > b) throw std::invalid_argument("split_point_masses: a > b");
  Functional plus, minus;
  for (const Atom& at : f.atoms()) {
    if (at.location.real() >= a)
      plus.add_atom(at);
    else {
      Atom neg = at;
      neg.coefficient = -neg.coefficient;
      minus.add_atom(neg);
    }
  }
  if (f.density()) {
    double cut = 0.5 * (a + b);
    LineDensity base = *f.density();
    LineDensity dp = base, dm = base;
    auto fn = base.d;
    dp.d = [fn, cut](double x) { return x >= cut ? fn(x) : 0.0; };
    dm.d = [fn, cut](double x) { return x < cut ? -fn(x) : 0.0; };
    plus.set_density(dp);
    minus.set_density(dm);
  }
  return {plus, minus};
}

}  // namespace striphyp
