#pragma once

#include "dunkl/quasipoly.hpp"
#include "dunkl/sectors.hpp"

namespace dunkl::es {

/// Generalized Laguerre polynomial L^(alpha)_k; alpha > -1 keeps the family
/// orthogonal and the wavefunctions normalizable.
struct LaguerreIndex {
  int k = 0;
  double alpha = 0.0;

  LaguerreIndex() = default;
  LaguerreIndex(int k_, double alpha_) : k(k_), alpha(alpha_) {
    if (k < 0) throw std::invalid_argument("Laguerre degree must be non-negative");
    if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre order must be > -1");
  }
};

/// Value by the stable forward three-term recurrence.
double laguerre_eval(const LaguerreIndex &idx, double z);
/// Monomial coefficients c_0..c_k of L^(alpha)_k(z), same recurrence.
std::vector<double> laguerre_coeffs(const LaguerreIndex &idx);

/// One exactly solvable level.  Wavefunctions carry leading polynomial
/// coefficient 1 (the closed formulas only fix them up to proportionality).
struct ESLevel {
  int k = 0;
  int epsilon = 0;    // line family only
  double energy = 0.0;
  double beta = 0.0;  // Coulomb length scale, 0 elsewhere
  QuasiPolynomial wavefunction;
};

/// Dunkl oscillator on the line: energy 2k + eps + mu + 1/2, wavefunction
/// x^eps L^(mu-1/2+eps)_k(x^2) exp(-x^2/2).
ESLevel es_line_level(const DunklParams &p, int k, const Parity &eps);

/// Radial factor of the isotropic Dunkl oscillator in the plane:
/// energy 2k + 2nu + mu1 + mu2 + 1, rho^{2nu} L^(2nu+mu1+mu2)_k(rho^2) exp(-rho^2/2).
ESLevel es_plane_oscillator_level(const PlaneSector &sector, int k);

/// Radial factor of the Dunkl Coulomb problem in the plane with potential
/// -alpha/(2 rho): energy -alpha^2/(8 N^2), N = k + 2nu + mu1 + mu2 + 1/2,
/// wavefunction e^{-beta rho/2} (beta rho)^{2nu} L^(4nu+2mu1+2mu2)_k(beta rho),
/// beta = alpha/N.
ESLevel es_plane_coulomb_level(const PlaneSector &sector, int k, double alpha_coupling);

/// Three-dimensional radial oscillator level: E = 2(2k + l + 3/2) with
/// r^{l+1} L^(l+1/2)_k(r^2) e^{-r^2/2}.  Kept in raw form (leading power +
/// z-polynomial) because l need not be an integer; it exists to validate the
/// l-substitution maps.
struct Radial3DLevel {
  double energy = 0.0;
  double leading_power = 0.0;  // l + 1
  std::vector<double> poly_z;  // monic polynomial in z = r^2
};
Radial3DLevel radial_oscillator_3d_level(double l, int k);

} // namespace dunkl::es
