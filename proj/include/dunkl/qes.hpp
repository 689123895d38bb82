#pragma once

#include "dunkl/operators.hpp"
#include "dunkl/quasipoly.hpp"
#include "dunkl/sectors.hpp"
#include "dunkl/tridiag.hpp"

#include <optional>

namespace dunkl::qes {

enum class BlockKind { oscillator, coulomb };

/// Tridiagonal (n+1)x(n+1) block whose eigenvalues are the known gauged
/// energies (oscillator families, physical energy = eigenvalue/2) or the
/// coupling constants alpha_k (Coulomb family).
struct QESBlock {
  int size = 0;             // n + 1
  std::vector<double> diag; // d_0..d_n
  std::vector<double> sub;  // entry (k+1, k), k = 0..n-1
  std::vector<double> sup;  // entry (k, k+1), k = 0..n-1
  BlockKind kind = BlockKind::oscillator;
};

/// Gauged action of the extended radial oscillator on span{1, z, ..., z^n},
/// z = r^2:  h p = -4z p'' + [4az^2 + 4bz - (4l+6)] p' + [-4anz + b(2l+3)] p,
/// which is tridiagonal on monomials:
///   d_k = b(4k+2l+3),  (k+1,k) = 4a(k-n),  (k,k+1) = -2(k+1)(2k+2l+3).
QESBlock build_oscillator_block(const EffectiveL &l, const GaugeParams &g, int n);

/// Gauged alpha-eigenproblem of the extended Coulomb family on
/// span{1, r, ..., r^n} at the fixed energy a(2n+2l+3) - b^2:
///   -r p'' + [2ar^2 + 2br - (2l+2)] p' - 2nar p = alpha p, i.e.
///   d_k = 2bk,  (k+1,k) = 2a(k-n),  (k,k+1) = -(k+1)(k+2l+2).
QESBlock build_coulomb_block(const EffectiveL &l, const GaugeParams &g, int n);

/// Diagonal similarity onto a symmetric tridiagonal matrix
/// (off_k = sqrt(sub_k * sup_{k-1})); scale maps its eigenvectors back to
/// block eigenvectors componentwise.
struct SymmetrizedBlock {
  SymTridiag t;
  std::vector<double> scale;
};
SymmetrizedBlock symmetrize(const QESBlock &block);

/// Eigenvalues (ascending) and raw block eigenvectors; takes the exact
/// triangular path at a = 0 where the block is not symmetrizable.
struct BlockEigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
BlockEigen solve_block(const QESBlock &block);

enum class Family { line_oscillator, plane_oscillator, plane_coulomb };
enum class Provenance { block, closed_form };

/// One known level of a QES family.
struct QESSolution {
  Family family = Family::line_oscillator;
  int index = 0; // level index k: ascending energy (oscillators) / ascending alpha (Coulomb)
  int n = 0;     // representation label; the polynomial degree in the natural variable
  double energy = 0.0;
  double alpha = 0.0;           // Coulomb coupling, 0 for oscillator families
  std::vector<double> poly;     // polynomial factor in x^2 (oscillators) or rho (Coulomb), monic
  QuasiPolynomial wavefunction; // full line/radial factor including gauge and leading power
  bool degenerate_degree = false;
  Provenance provenance = Provenance::block;
  double effective_l = 0.0;
};

/// Line family: l = mu + eps - 1, physical energies = block eigenvalues / 2,
/// wavefunctions x^eps p(x^2) under exp(-(a/4)x^4 - (b/2)x^2).
std::vector<QESSolution> solve_line_qes(const DunklParams &p, const Parity &eps,
                                        const GaugeParams &g, int n);

/// Plane oscillator family: l = 2nu + mu1 + mu2 - 1/2, radial factor
/// rho^{2nu} p(rho^2) under the same quartic gauge.
std::vector<QESSolution> solve_plane_oscillator_qes(const PlaneSector &sector,
                                                    const GaugeParams &g, int n);

/// Plane Coulomb family: the n+1 potentials share the energy
/// a(n + 2nu + mu1 + mu2 + 1) - b^2/2; solutions are indexed by alpha_k in
/// ascending order, and the alpha_k polynomial has exactly k positive roots
/// (the known state of the k-th potential is its k-th excited state).
/// Radial factor rho^{2nu} p(rho) under exp(-(a/2)rho^2 - b rho).
std::vector<QESSolution> solve_plane_coulomb_qes(const PlaneSector &sector,
                                                 const GaugeParams &g, int n);

/// Explicit n = 0, 1 answers, kept as an independent path against the block
/// route; n >= 2 has no closed form.
std::vector<QESSolution> closed_form_line(const DunklParams &p, const Parity &eps,
                                          const GaugeParams &g, int n);
std::vector<QESSolution> closed_form_plane_oscillator(const PlaneSector &sector,
                                                      const GaugeParams &g, int n);
std::vector<QESSolution> closed_form_plane_coulomb(const PlaneSector &sector,
                                                   const GaugeParams &g, int n);

/// Effective scalar potentials for tabulation.  The line potential is
/// parity-resolved (R replaced by 1-2eps); singular points evaluate to NaN
/// markers instead of failing globally.
std::vector<double> line_potential(const DunklParams &p, const Parity &eps, const GaugeParams &g,
                                   int n, const std::vector<double> &x);
std::vector<double> plane_oscillator_potential(const PlaneSector &sector, const GaugeParams &g,
                                               int n, const std::vector<double> &rho);
std::vector<double> plane_coulomb_potential(const PlaneSector &sector, const GaugeParams &g,
                                            int n, double alpha_k, const std::vector<double> &rho);

/// Exact gauged radial operators of the plane families (for residual checks).
LaurentCoeffs plane_oscillator_apply(const PlaneSector &sector, const GaugeParams &g, int n,
                                     const QuasiPolynomial &f);
LaurentCoeffs plane_coulomb_apply(const PlaneSector &sector, const GaugeParams &g, int n,
                                  double alpha_k, const QuasiPolynomial &f);
/// Their exactly solvable limits (harmonic plane oscillator, plane Coulomb
/// with coupling alpha).
LaurentCoeffs plane_oscillator_es_apply(const PlaneSector &sector, const QuasiPolynomial &f);
LaurentCoeffs plane_coulomb_es_apply(const PlaneSector &sector, double alpha_coupling,
                                     const QuasiPolynomial &f);

/// Simple positive roots of a polynomial by sign changes on a logarithmic
/// sweep, refined by bisection.  Root counts realize the node invariants.
std::vector<double> positive_roots(const std::vector<double> &poly);

} // namespace dunkl::qes
