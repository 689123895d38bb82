#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

/// Reflection parity label: epsilon = 0 for even functions, 1 for odd ones.
/// The reflection operator R f(x) = f(-x) has eigenvalue 1 - 2*epsilon on
/// functions of definite parity.
struct Parity {
  int epsilon = 0;

  Parity() = default;
  explicit Parity(int eps) : epsilon(eps) {
    if (eps != 0 && eps != 1)
      throw std::invalid_argument("parity epsilon must be 0 or 1");
  }
  double reflection_eigenvalue() const { return 1.0 - 2.0 * epsilon; }
};

/// Deformation parameter of the Dunkl derivative D_mu = d/dx + (mu/x)(1-R).
struct DunklParams {
  double mu = 0.0;

  DunklParams() = default;
  explicit DunklParams(double mu_) : mu(mu_) {
    if (!(mu > -0.5))
      throw std::invalid_argument("mu must be > -1/2");
  }
};

/// Family gauge parameters: the oscillator families use the exponential
/// factor exp(-(a/4)x^4 - (b/2)x^2), the Coulomb family exp(-(a/2)x^2 - b x).
/// Validity (a > 0, or a = 0 with b > 0 in the harmonic limit) is checked by
/// the solvers, not here: the operator algebra itself is gauge-agnostic.
struct GaugeParams {
  double a = 0.0;
  double b = 0.0;
};

/// Exponent of a gauge factor exp(-(quartic/4)x^4 - (quadratic/2)x^2 - linear*x).
struct Gauge {
  double quartic = 0.0;
  double quadratic = 0.0;
  double linear = 0.0;

  bool operator==(const Gauge &) const = default;

  double exponent(double x) const {
    return 0.25 * quartic * x * x * x * x + 0.5 * quadratic * x * x + linear * x;
  }
  double factor(double x) const { return std::exp(-exponent(x)); }
  /// True if exp(-exponent) decays at +infinity (integrable against any polynomial).
  bool decays() const {
    if (quartic != 0.0) return quartic > 0.0;
    if (quadratic != 0.0) return quadratic > 0.0;
    return linear > 0.0;
  }
  bool even() const { return linear == 0.0; }
};

inline Gauge oscillator_gauge(const GaugeParams &g) { return Gauge{g.a, g.b, 0.0}; }
inline Gauge coulomb_gauge(const GaugeParams &g) { return Gauge{0.0, g.a, g.b}; }

/// Function exp(-gauge exponent) * sum_m coeffs[m] x^m.
///
/// The class is closed under d/dx, multiplication by polynomials, reflection,
/// the Dunkl derivative and its extension, and sums with matching gauge; all
/// spectral results of the library live in it exactly.
struct QuasiPolynomial {
  Gauge gauge;
  std::vector<double> coeffs; // coeffs[m] multiplies x^m

  QuasiPolynomial() = default;
  QuasiPolynomial(Gauge g, std::vector<double> c) : gauge(g), coeffs(std::move(c)) {}

  double coeff(int m) const {
    return (m >= 0 && m < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(m)] : 0.0;
  }
  /// Index of the highest nonzero coefficient; -1 for the zero function.
  int degree() const;
  double max_abs_coeff() const;
  double poly_eval(double x) const;
  double eval(double x) const { return gauge.factor(x) * poly_eval(x); }
  /// True if all coefficients of the wrong parity vanish (exactly).
  bool has_parity(int epsilon) const;
};

QuasiPolynomial operator+(const QuasiPolynomial &f, const QuasiPolynomial &g);
QuasiPolynomial operator-(const QuasiPolynomial &f, const QuasiPolynomial &g);
QuasiPolynomial operator*(double s, const QuasiPolynomial &f);

/// f(x) -> f(-x): flips odd-index coefficients; an odd gauge exponent term
/// flips sign with it, even gauges are untouched.
QuasiPolynomial reflect(const QuasiPolynomial &f);

/// Multiplication by x^k, k >= 0.
QuasiPolynomial mul_power(const QuasiPolynomial &f, int k);
/// Multiplication by an explicit polynomial (coefficient list).
QuasiPolynomial mul_poly(const QuasiPolynomial &f, const std::vector<double> &p);
/// Exact derivative, chain rule through the gauge factor included.
QuasiPolynomial derivative(const QuasiPolynomial &f);

/// Plain polynomial coefficient helpers (no gauge), shared by the solvers,
/// the oracle and the tests.
std::vector<double> poly_mul(const std::vector<double> &p, const std::vector<double> &q);
std::vector<double> poly_deriv(const std::vector<double> &p);
double poly_eval(const std::vector<double> &p, double x);

/// Coefficients c[i] for powers x^(lo + i).  Operator applications that
/// generate 1/x or 1/x^2 terms (the radial drift and centrifugal pieces)
/// return these so that the singular-power cancellations can be checked
/// honestly instead of being dropped.
struct LaurentCoeffs {
  int lo = 0;
  std::vector<double> c;

  double coeff(int power) const {
    int i = power - lo;
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0.0;
  }
  int min_power() const { return lo; }
  int max_power() const { return lo + static_cast<int>(c.size()) - 1; }
};

LaurentCoeffs to_laurent(const QuasiPolynomial &f);
LaurentCoeffs laurent_add(const LaurentCoeffs &u, const LaurentCoeffs &v);
LaurentCoeffs laurent_scale(double s, const LaurentCoeffs &u);
/// Multiply by x^k (k may be negative; this only relabels powers).
LaurentCoeffs laurent_shift(const LaurentCoeffs &u, int k);
/// d/dx on the monomial basis; x^0 differentiates to zero.
LaurentCoeffs laurent_deriv(const LaurentCoeffs &u);
double laurent_max_abs(const LaurentCoeffs &u);

/// Sampled function on a symmetric grid; exists for visualization and for
/// oracle cross-checks only, never for spectral computation.
struct GridFunction {
  std::vector<double> x; // ascending abscissas, reflection-closed
  std::vector<double> values;
};

/// Sample f on the uniform symmetric grid [-half_width, half_width] with
/// npoints abscissas (npoints odd keeps x = 0 on the grid).
GridFunction sample_symmetric(const QuasiPolynomial &f, double half_width, int npoints);
/// Pointwise reflection; throws "grid not reflection-closed" on asymmetric grids.
GridFunction reflect(const GridFunction &f);

} // namespace dunkl
