#include "striphyp/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace striphyp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDivergenceSentinel = 1e12;
}  // namespace

TestFunction TestFunction::zero() { return TestFunction(); }

TestFunction TestFunction::gaussian(double a, complex shift, complex coef) {
  if (a < 0.0) throw std::invalid_argument("gaussian: a must be >= 0");
  TestFunction f;
  f.form_ = Form::Gaussian;
  f.a_ = a;
  f.shift_ = shift;
  f.coef_ = coef;
  return f;
}

TestFunction TestFunction::reciprocal_minorant(AnalyticMinorant F) {
  TestFunction f;
  f.form_ = Form::Recip;
  f.minorant_ = std::make_shared<AnalyticMinorant>(std::move(F));
  return f;
}

TestFunction TestFunction::product(TestFunction a, TestFunction b) {
  TestFunction f;
  f.form_ = Form::Product;
  f.left_ = std::make_shared<TestFunction>(std::move(a));
  f.right_ = std::make_shared<TestFunction>(std::move(b));
  return f;
}

TestFunction TestFunction::scaled(complex c) const {
  TestFunction f = *this;
  if (f.form_ == Form::Zero) return f;
  if (f.form_ == Form::Gaussian) {
    f.coef_ *= c;
    return f;
  }
  return product(gaussian(0.0, 0.0, c), f);
}

complex TestFunction::operator()(complex z) const {
  switch (form_) {
    case Form::Zero: return 0.0;
    case Form::Gaussian: {
      complex d = z - shift_;
      return coef_ * std::exp(-a_ * d * d);
    }
    case Form::Recip: {
      double U = minorant_->U(z.real(), z.imag());
      double V = harmonic_conjugate_path(*minorant_, z);
      return std::exp(complex(-U, -V));
    }
    case Form::Product: return (*left_)(z) * (*right_)(z);
  }
  return 0.0;
}

double TestFunction::modulus(complex z) const {
  switch (form_) {
    case Form::Zero: return 0.0;
    case Form::Gaussian: {
      complex d = z - shift_;
      return std::abs(coef_) * std::exp(-(a_ * d * d).real());
    }
    case Form::Recip:
      return std::exp(-minorant_->U(z.real(), z.imag()));
    case Form::Product: return left_->modulus(z) * right_->modulus(z);
  }
  return 0.0;
}

double TestFunction::strip_half_width() const {
  switch (form_) {
    case Form::Recip: return minorant_->half_width();
    case Form::Product:
      return std::min(left_->strip_half_width(), right_->strip_half_width());
    default: return kInf;
  }
}

std::optional<DecayEnvelope> TestFunction::line_envelope(double y) const {
  switch (form_) {
    case Form::Zero: return DecayEnvelope{0.0, 1.0, 0.0};
    case Form::Gaussian: {
      if (a_ == 0.0) return std::nullopt;  // constant, no decay
      // |phi(x+iy)| = |coef| exp(-a((x-xs)^2 - (y-ys)^2)); beyond
      // |x| >= start the quadratic beats rate 1.
      double xs = shift_.real(), ys = shift_.imag();
      double peak = std::abs(coef_) * std::exp(a_ * (y - ys) * (y - ys));
      double start = std::abs(xs) + (1.0 + 1.0 / a_);
      double margin = a_ * (start - std::abs(xs));
      DecayEnvelope env;
      env.rate = std::min(margin, 1.0);
      env.start = start;
      env.coef = peak * std::exp(env.rate * start -
                                 a_ * (start - std::abs(xs)) * (start - std::abs(xs)));
      env.coef = std::max(env.coef, peak);
      return env;
    }
    case Form::Recip: return std::nullopt;  // subexponential decay only
    case Form::Product: {
      auto l = left_->line_envelope(y);
      auto r = right_->line_envelope(y);
      if (l && r) {
        DecayEnvelope env;
        env.start = std::max(l->start, r->start);
        env.rate = l->rate + r->rate;
        env.coef = l->coef * r->coef;
        return env;
      }
      if (l && right_->form() == Form::Recip) return l;  // |1/F| <= C on lines
      if (r && left_->form() == Form::Recip) return r;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string TestFunction::spec() const {
  switch (form_) {
    case Form::Zero: return "zero";
    case Form::Gaussian: return "gaussian";
    case Form::Recip: return "recip(" + minorant_->weight().spec() + ")";
    case Form::Product: return "product(" + left_->spec() + ";" + right_->spec() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

double weight_term(const SpaceParams& p, double x) {
  return p.scaling_mode == MinorantMode::Dilate ? p.weight(p.lambda * x)
                                                : p.lambda * p.weight(x);
}

}  // namespace

double strip_norm(const TestFunction& phi, const SpaceParams& p,
                  const GridConfig& cfg) {
  if (phi.strip_half_width() < p.h)
    throw std::invalid_argument("strip_norm: phi not defined on the strip");
  if (phi.form() == TestFunction::Form::Zero) return 0.0;
  const double y_max = p.h * (1.0 - 1e-6);
  const int ny = 21;
  auto value = [&](double x, double y) {
    double v = phi.modulus(complex(x, y)) * std::exp(weight_term(p, x));
    return std::isnan(v) ? 0.0 : v;
  };
  double X = 8.0;
  double sup = 0.0, arg_x = 0.0, arg_y = 0.0;
  int nx = std::max(cfg.points / 4, 64);
  auto sweep = [&](double x0, double x1, double y0, double y1, int mx, int my) {
    for (int i = 0; i <= mx; ++i) {
      double x = x0 + (x1 - x0) * i / mx;
      for (int j = 0; j <= my; ++j) {
        double y = y0 + (y1 - y0) * j / my;
        double v = value(x, y);
        if (v > sup) {
          sup = v;
          arg_x = x;
          arg_y = y;
        }
      }
    }
  };
  sweep(-X, X, -y_max, y_max, nx, ny);
  // truncation doubling: divergence along growing |x| trips the sentinel
  for (int d = 0; d < 2 + cfg.doublings; ++d) {
    double prev = sup;
    X *= 2.0;
    sweep(-X, -X / 2.0, -y_max, y_max, nx / 2, ny);
    sweep(X / 2.0, X, -y_max, y_max, nx / 2, ny);
    if (sup > kDivergenceSentinel) return kInf;
    if (sup <= prev * (1.0 + 1e-12)) break;
  }
  if (sup > kDivergenceSentinel) return kInf;
  // refinement around the argmax
  double dx = 2.0 * X / nx, dy = 2.0 * y_max / ny;
  for (int level = 0; level < 6; ++level) {
    double x0 = arg_x - dx, x1 = arg_x + dx;
    double y0 = std::max(arg_y - dy, -y_max), y1 = std::min(arg_y + dy, y_max);
    sweep(x0, x1, y0, y1, 16, 16);
    dx /= 5.0;
    dy /= 5.0;
  }
  return sup;
}

MembershipReport membership_report(const TestFunction& phi, const Weight& w,
                                   Flavor flavor, MinorantMode scaling_mode,
                                   const GridConfig& cfg) {
  MembershipReport rep;
  rep.flavor = flavor;
  const double lattice[] = {0.25, 0.5, 1.0, 2.0, 4.0};
  bool all = true, some = false;
  for (double h : lattice)
    for (double lambda : lattice) {
      MembershipCell cell{h, lambda, kInf, false};
      try {
        SpaceParams p{w, h, lambda, flavor, scaling_mode};
        cell.norm = strip_norm(phi, p, cfg);
        cell.finite = std::isfinite(cell.norm);
      } catch (const std::invalid_argument&) {
        cell.finite = false;
      }
      all = all && cell.finite;
      some = some || cell.finite;
      rep.cells.push_back(cell);
    }
  rep.member = flavor == Flavor::Beurling ? all : some;
  rep.grade = ConditionVerdict::Status::NumericallySupported;
  return rep;
}

TestFunction make_test_function(const Weight& w_dom, double h) {
  if (!w_dom.has_tag(WeightCond::Epsilon0))
    throw std::invalid_argument("make_test_function: (epsilon)_0 not certified");
  if (w_dom.kind() == Weight::Kind::Zero)
    return TestFunction::gaussian(0.0, 0.0, 1.0);  // degenerate constant
  Weight sigma = dominate_all_dilates(w_dom);
  AnalyticMinorant F = build_minorant(sigma, 1.0, h, MinorantMode::Dilate);
  return TestFunction::reciprocal_minorant(std::move(F));
}

}  // namespace striphyp
