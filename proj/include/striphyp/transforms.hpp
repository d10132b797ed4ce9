#pragma once

#include <functional>
#include <optional>

#include "striphyp/reps.hpp"

namespace striphyp {

/// Function on a real line (Fourier side) with an optional certified
/// exponential decay envelope.
struct LineFunction {
  std::function<complex(double)> f;
  std::optional<DecayEnvelope> decay;
};

struct K1Norms {
  double rho_omega = 0.0;
  double rho_h = 0.0;
  double rho_combined = 0.0;
};

enum class PWRegion { Entire, UpperHalfPlane, AboveLambda };

struct LaplaceBoundSpec {
  double a = 0.0;       // support offset
  double h = 0.0;       // exponential rate in xi
  double lambda = 0.0;  // conjugate scale, 0 = no conjugate term
  Weight w = Weight::zero();
  PWRegion region = PWRegion::UpperHalfPlane;
  Flavor flavor = Flavor::Roumieu;
  double epsilon = 0.1;
};

/// Fourier transform by shifted-line quadrature: the line Im z = -+k
/// chosen by sign(xi) so the exponential gains e^{-k|xi|}.
complex fourier_strip(const TestFunction& phi, double k, double xi,
                      const QuadConfig& cfg = {});

/// (1/2 pi) integral of psi(xi) e^{i x xi} d xi.
complex inverse_fourier_line(const LineFunction& psi, double x,
                             const QuadConfig& cfg = {});

/// rho_h = sup |psi| e^{h|xi|}, rho_omega = sup |F^{-1} psi| e^{omega(lambda x)}.
K1Norms k1_norms(const LineFunction& psi, const Weight& w, double h,
                 double lambda, const QuadConfig& cfg = {});

/// -(1/2 pi) sum of contour integrals of F(z) e^{i z zeta} over the
/// rectangle boundaries T^b(J_i); intervals from the contour spec or
/// derived from the atom supports.
complex laplace_transform(const AnalyticRep& F, complex zeta,
                          const ContourSpec& contour,
                          const QuadConfig& cfg = {});

/// Verdict for sup |G(zeta)| e^{-(a+eps)eta - (h+eps)|xi| - lambda omega*(eta/lambda)}
/// over the region grid; Fails carries the witnessing point.
ConditionVerdict paley_wiener_check(const std::function<complex(complex)>& G,
                                    const LaplaceBoundSpec& spec,
                                    const GridConfig& cfg = {});

}  // namespace striphyp
