#pragma once

#include "dunkl/quasipoly.hpp"

namespace dunkl {

/// Effective angular-momentum parameter of the gauged half-line problem.
/// Oscillator maps need l > -3/2, the Coulomb map needs l > -1; the builders
/// check the bound that applies to them.
struct EffectiveL {
  double l = 0.0;
};

/// Line sector: l = mu + epsilon - 1.
EffectiveL line_effective_l(const DunklParams &p, const Parity &eps);

/// Fixed angular sector of the plane problems.  The admissible nu lattice
/// depends on the parities: nu = 0,1,2,... for (0,0); 1,2,3,... for (1,1);
/// 1/2,3/2,... for mixed.  M^2 = 4 nu (nu + mu1 + mu2) must be >= 0.
struct PlaneSector {
  Parity eps1, eps2;
  double nu = 0.0;
  double mu1 = 0.0, mu2 = 0.0;

  PlaneSector() = default;
  PlaneSector(Parity e1, Parity e2, double nu_, double mu1_, double mu2_);

  double m_squared() const { return 4.0 * nu * (nu + mu1 + mu2); }
  EffectiveL effective_l() const { return EffectiveL{2.0 * nu + mu1 + mu2 - 0.5}; }
  /// Weight exponent w of the radial measure rho^w and of the -(w/rho) d/drho
  /// drift term: w = 2 mu1 + 2 mu2 + 1.
  double drift_weight() const { return 2.0 * mu1 + 2.0 * mu2 + 1.0; }
  /// 2*nu as the integer power it contributes to radial wavefunctions.
  int two_nu() const;
};

} // namespace dunkl
