#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "striphyp/stripharmonic.hpp"

namespace striphyp {

enum class Flavor { Beurling, Roumieu };

/// Analytic test function on a strip: Gaussian atoms, reciprocals of
/// analytic minorants (zero-free by construction), and products and
/// scalar multiples thereof.
class TestFunction {
 public:
  enum class Form { Zero, Gaussian, Recip, Product };

  static TestFunction zero();
  /// coef * exp(-a (z - shift)^2); a = 0 gives the constant coef.
  static TestFunction gaussian(double a, complex shift = 0.0,
                               complex coef = 1.0);
  static TestFunction reciprocal_minorant(AnalyticMinorant F);
  static TestFunction product(TestFunction f, TestFunction g);
  TestFunction scaled(complex c) const;

  /// Full complex value; for Recip forms the phase needs a conjugate
  /// path integration, so prefer modulus() when only |phi| matters.
  complex operator()(complex z) const;
  double modulus(complex z) const;

  /// Half-width of the declared strip of analyticity (infinity for
  /// entire forms).
  double strip_half_width() const;

  /// Exponential decay envelope along the horizontal line Im z = y,
  /// when one exists: |phi(x + iy)| <= coef e^{-rate |x|} for |x| >= start.
  std::optional<DecayEnvelope> line_envelope(double y) const;

  Form form() const { return form_; }
  double gauss_a() const { return a_; }
  complex gauss_shift() const { return shift_; }
  const AnalyticMinorant* minorant() const { return minorant_.get(); }
  std::string spec() const;

 private:
  TestFunction() = default;
  Form form_ = Form::Zero;
  double a_ = 0.0;
  complex shift_ = 0.0, coef_ = 1.0;
  std::shared_ptr<const AnalyticMinorant> minorant_;
  std::shared_ptr<const TestFunction> left_, right_;
};

struct SpaceParams {
  Weight weight;
  double h = 1.0;
  double lambda = 1.0;
  Flavor flavor = Flavor::Beurling;
  MinorantMode scaling_mode = MinorantMode::Dilate;
};

/// sup over the strip of |phi(z)| e^{omega-term(x)}, approximated on
/// the closed sub-strip |y| <= h (1 - 1e-6) with argmax refinement.
/// Returns +infinity when the sup diverges along truncation doubling.
double strip_norm(const TestFunction& phi, const SpaceParams& p,
                  const GridConfig& cfg = {});

struct MembershipCell {
  double h, lambda;
  double norm;
  bool finite;
};

struct MembershipReport {
  std::vector<MembershipCell> cells;
  bool member = false;
  ConditionVerdict::Status grade = ConditionVerdict::Status::NumericallySupported;
  Flavor flavor = Flavor::Beurling;
};

MembershipReport membership_report(const TestFunction& phi, const Weight& w,
                                   Flavor flavor, MinorantMode scaling_mode,
                                   const GridConfig& cfg = {});

/// 1/F for F a minorant of the dilate-dominating weight built from
/// w_dom; decays faster than e^{-omega(lambda x)} for every lambda.
TestFunction make_test_function(const Weight& w_dom, double h);

}  // namespace striphyp
