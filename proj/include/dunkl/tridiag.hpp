#pragma once

#include <vector>

namespace dunkl {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
  std::vector<double> diag;
  std::vector<double> off;
};

struct TridiagEigen {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[j] is the eigenvector of values[j]
};

/// All eigenpairs by implicit-shift QL with eigenvector accumulation.
/// Residual contract: ||T v - lambda v|| <= 1e-12 ||T|| per pair; throws on
/// non-convergence, naming the offending index.
TridiagEigen eig_tridiag(const SymTridiag &t);

/// Number of eigenvalues strictly below x (Sturm sequence count).
int sturm_count_below(const SymTridiag &t, double x);

/// The `count` lowest eigenvalues by bisection on the Sturm count.  Used as
/// the independent route against eig_tridiag and as the finite-difference
/// oracle's eigenvalue engine.
std::vector<double> eig_tridiag_bisect(const SymTridiag &t, int count);

/// Eigenvector for an eigenvalue estimate, by shifted inverse iteration.
std::vector<double> inverse_iteration(const SymTridiag &t, double lambda);

} // namespace dunkl
