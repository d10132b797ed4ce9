#pragma once

#include <functional>

#include "striphyp/transforms.hpp"

namespace striphyp {

/// Almost-analytic extension of the Fourier transform of phi: the
/// truncated shifted-line integral
///   Psi(zeta) = integral_{-H(eta)}^{H(eta)} phi(x -+ ik) e^{-i(x -+ ik) zeta} dx
/// with the shift sign chosen by sign(xi) and the truncation radius
/// H = (omega')^{-1}(|eta|). On the real axis Psi equals the Fourier
/// transform of phi; off it, dbar Psi consists of the moving-endpoint
/// terms only and decays like e^{-omega*(eta)}.
class AlmostAnalyticExt {
 public:
  AlmostAnalyticExt(TestFunction phi, Weight w, double k, double h_norm);

  complex psi(complex zeta, const QuadConfig& cfg = {}) const;
  complex operator()(complex zeta, const QuadConfig& cfg = {}) const {
    return psi(zeta, cfg);
  }

  /// Exact Leibniz endpoint expression for dbar Psi; zero on the real
  /// axis by continuity.
  complex dbar(complex zeta, const QuadConfig& cfg = {}) const;

  double H(double eta) const;
  double Hprime(double eta) const;

  const TestFunction& source() const { return phi_; }
  const Weight& weight() const { return w_; }
  double shift() const { return k_; }
  double norm_half_width() const { return h_norm_; }

 private:
  TestFunction phi_;
  Weight w_;
  double k_;
  double h_norm_;
};

/// Preconditions: w smooth strictly concave with sublinear growth;
/// h_norm defaults to 2k and bounds the strip used for norm bounds.
AlmostAnalyticExt build_extension(const TestFunction& phi, const Weight& w,
                                  double k, double h_norm = 0.0);

complex dbar_extension(const AlmostAnalyticExt& E, complex zeta,
                       const QuadConfig& cfg = {});

/// Grid check of the two extension bounds:
///   |dbar Psi| <= N_omega e^{-k|xi|} |(omega*)''(eta)| e^{-omega*(eta)}
///   |Psi|      <= C N_sigma e^{-k|xi|},  C = 2 int_0^inf e^{omega - sigma}
/// over |xi| <= 20, 0 < eta <= 5; Fails carries the witnessing point.
ConditionVerdict check_extension_bounds(const AlmostAnalyticExt& E,
                                        const Weight& sigma,
                                        const GridConfig& cfg = {});

/// Stokes value of lim_{eta -> 0+} of the line pairing:
///   int G(xi+iL) Psi(xi+iL) dxi + 2i int_0^L int G(xi+iv) dbar Psi dxi dv
/// plus the seam term along xi = 0 where the contour branch switches.
complex stokes_boundary_pair(const std::function<complex(complex)>& G,
                             const AlmostAnalyticExt& E, double L,
                             const QuadConfig& cfg = {});

/// Direct small-eta quadrature of int G(xi+i eta) Psi(xi+i eta) dxi,
/// the comparison oracle for the Stokes value.
complex direct_boundary_pair(const std::function<complex(complex)>& G,
                             const AlmostAnalyticExt& E, double eta,
                             const QuadConfig& cfg = {});

}  // namespace striphyp
