#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "striphyp/spaces.hpp"

namespace striphyp {

/// coefficient x (order-th derivative evaluation at location).
struct Atom {
  complex location = 0.0;
  int order = 0;
  complex coefficient = 1.0;
};

/// Real-line density with certified exponential decay
/// |d(x)| <= coef e^{-rate |x|}.
struct LineDensity {
  std::function<double(double)> d;
  double coef = 1.0;
  double rate = 1.0;
  std::string name;
};

/// Finite combination of point masses / derivatives at complex points
/// plus an optional decaying line density.
class Functional {
 public:
  Functional() = default;
  static Functional delta(complex location, int order = 0,
                          complex coefficient = 1.0);
  Functional& add_atom(Atom a);
  Functional& set_density(LineDensity d);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<LineDensity>& density() const { return density_; }
  bool empty() const { return atoms_.empty() && !density_.has_value(); }

  /// Direct pairing: sum of coef x phi^{(order)}(location) plus the
  /// density integral.
  complex apply(const TestFunction& phi, const QuadConfig& cfg = {}) const;

 private:
  std::vector<Atom> atoms_;
  std::optional<LineDensity> density_;
};

/// Derivative of an analytic function by Cauchy-circle quadrature.
complex analytic_derivative(const std::function<complex(complex)>& f,
                            complex center, int order, double radius = 0.4);

/// Analytic function off the real line (or entire), evaluable on
/// T^{b,R}; either the Cauchy transform of a Functional with an
/// optional zero-free multiplier P, or a catalog closed form.
class AnalyticRep {
 public:
  /// F(z) = (P(z)/2 pi i) < f(zeta), 1/((zeta - z) P(zeta)) >.
  static AnalyticRep cauchy(Functional f,
                            std::shared_ptr<const AnalyticMinorant> P,
                            double b, double R);
  static AnalyticRep entire(std::function<complex(complex)> F);

  complex operator()(complex z) const;

  bool is_entire() const { return entire_ != nullptr; }
  const Functional* functional() const { return f_ ? f_.get() : nullptr; }
  const AnalyticMinorant* multiplier() const { return P_.get(); }
  double inner_height() const { return b_; }
  double outer_height() const { return R_; }
  /// Real parts of atom locations (declared support for contour ops).
  std::vector<double> support_points() const;

 private:
  AnalyticRep() = default;
  std::shared_ptr<const Functional> f_;
  std::shared_ptr<const AnalyticMinorant> P_;
  // 1/P derivatives at atom locations, precomputed per atom
  std::vector<std::vector<complex>> invP_derivs_;
  std::shared_ptr<const std::function<complex(complex)>> entire_;
  double b_ = 0.0, R_ = 1e9;

  complex multiplier_value(complex z) const;
};

struct ContourSpec {
  double k = 0.5;                  // contour half-height
  double truncation = 0.0;         // 0 = adaptive doubling
  std::vector<std::pair<double, double>> intervals;  // for support pairing
};

AnalyticRep cauchy_represent(const Functional& f,
                             std::shared_ptr<const AnalyticMinorant> P,
                             double b, double R);

/// <bv(F), phi> = - contour integral of F phi over the
/// counterclockwise boundary of T^k (truncated adaptively).
complex boundary_pair(const AnalyticRep& F, const TestFunction& phi,
                      const ContourSpec& c, const QuadConfig& cfg = {});

/// Sum of rectangle-boundary integrals over T^b(J_i); equals
/// boundary_pair when the J_i cover the support.
complex support_pair(const AnalyticRep& F, const TestFunction& phi,
                     const std::vector<std::pair<double, double>>& intervals,
                     double b, const QuadConfig& cfg = {});

/// |F(z) - (P(z)/2 pi i) contour_{Gamma_L} F(zeta)/((zeta-z)P(zeta)) d zeta|.
/// Small residual certifies analytic continuation across the line.
double edge_continuation_check(const AnalyticRep& F,
                               std::shared_ptr<const AnalyticMinorant> P,
                               double L, complex z,
                               const QuadConfig& cfg = {});

/// f = f_plus - f_minus with atoms of real part >= a in f_plus;
/// densities split by indicator at (a+b)/2.
std::pair<Functional, Functional> split_point_masses(const Functional& f,
                                                     double a, double b);

}  // namespace striphyp
