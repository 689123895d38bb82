#pragma once

#include "dunkl/quasipoly.hpp"

namespace dunkl {

/// Dunkl derivative D_mu = d/dx + (mu/x)(1 - R), applied exactly.
///
/// (1 - R) is applied first, which leaves an odd polynomial factor, so the
/// division by x is a plain index shift and no negative power can appear.
QuasiPolynomial dunkl_apply(const DunklParams &p, const QuasiPolynomial &f);

/// Extended Dunkl derivative D_mu - (a/3) x^3 R with a = g.a.
QuasiPolynomial extended_dunkl_apply(const DunklParams &p, const GaugeParams &g,
                                     const QuasiPolynomial &f);

enum class LineHamiltonianForm { direct, extended };

/// Anharmonic Dunkl oscillator Hamiltonian on the line for representation
/// index n, applied exactly.
///
/// direct:   (1/2){ -D_mu^2 + a^2 x^6 + 2ab x^4 + [b^2 - (2mu+4+4n)a] x^2 } f
///           + (a/2) x^2 (R f)
/// extended: (1/2){ -Dhat^2 + (8/9)a^2 x^6 + 2ab x^4
///           + [b^2 - ((8/3)mu+4+4n)a] x^2 } f,  Dhat = D_mu - (a/3)x^3 R.
/// The two forms are the same operator; tests hold them to round-off.
QuasiPolynomial line_hamiltonian_apply(const DunklParams &p, const GaugeParams &g, int n,
                                       const QuasiPolynomial &f, LineHamiltonianForm form);

/// Half-line operator prefactor * { -d^2/dx^2 - (drift/x) d/dx + V(x) } with a
/// multiplicative Laurent-polynomial potential V (power -> coefficient).
/// Covers the gauged radial Schroedinger operators of all three families.
struct RadialOperator {
  double prefactor = 0.5;
  double drift = 0.0;
  std::vector<std::pair<int, double>> potential;
};

/// Exact application to a quasi-polynomial; the result may contain 1/x and
/// 1/x^2 powers (they cancel only on true eigenfunctions, and the residual
/// meter checks that they do).
LaurentCoeffs radial_apply(const RadialOperator &op, const QuasiPolynomial &f);

} // namespace dunkl
