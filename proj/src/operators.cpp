#include "dunkl/operators.hpp"

#include <cmath>

namespace dunkl {

namespace {

void require_even_gauge(const QuasiPolynomial &f, const char *what) {
  if (!f.gauge.even())
    throw std::invalid_argument(std::string(what) + " requires a reflection-even gauge");
}

void require_gauge_match(const QuasiPolynomial &f, const GaugeParams &g) {
  if (!(f.gauge == oscillator_gauge(g)))
    throw std::invalid_argument("gauge mismatch: function gauge differs from the family gauge");
}

} // namespace

QuasiPolynomial dunkl_apply(const DunklParams &p, const QuasiPolynomial &f) {
  require_even_gauge(f, "dunkl_apply");
  QuasiPolynomial res = derivative(f);
  if (p.mu != 0.0 && !f.coeffs.empty()) {
    // (1-R) f has odd-index coefficients 2 c_m only; dividing by x shifts them down.
    std::vector<double> shifted(f.coeffs.size(), 0.0);
    bool any = false;
    for (size_t m = 1; m < f.coeffs.size(); m += 2) {
      shifted[m - 1] = 2.0 * p.mu * f.coeffs[m];
      any = any || f.coeffs[m] != 0.0;
    }
    if (any) res = res + QuasiPolynomial{f.gauge, std::move(shifted)};
  }
  return res;
}

QuasiPolynomial extended_dunkl_apply(const DunklParams &p, const GaugeParams &g,
                                     const QuasiPolynomial &f) {
  QuasiPolynomial res = dunkl_apply(p, f);
  if (g.a != 0.0) res = res - (g.a / 3.0) * mul_power(reflect(f), 3);
  return res;
}

QuasiPolynomial line_hamiltonian_apply(const DunklParams &p, const GaugeParams &g, int n,
                                       const QuasiPolynomial &f, LineHamiltonianForm form) {
  if (n < 0) throw std::invalid_argument("n must be a non-negative integer");
  require_gauge_match(f, g);
  const double a = g.a, b = g.b;

  if (form == LineHamiltonianForm::direct) {
    QuasiPolynomial kin = dunkl_apply(p, dunkl_apply(p, f));
    QuasiPolynomial pot =
        mul_poly(f, {0.0, 0.0, b * b - (2.0 * p.mu + 4.0 + 4.0 * n) * a, 0.0, 2.0 * a * b, 0.0,
                     a * a});
    QuasiPolynomial sum = (-1.0 * kin) + pot;
    if (a != 0.0) sum = sum + mul_power(a * reflect(f), 2);
    return 0.5 * sum;
  }

  QuasiPolynomial kin = extended_dunkl_apply(p, g, extended_dunkl_apply(p, g, f));
  QuasiPolynomial pot = mul_poly(
      f, {0.0, 0.0, b * b - ((8.0 / 3.0) * p.mu + 4.0 + 4.0 * n) * a, 0.0, 2.0 * a * b, 0.0,
          (8.0 / 9.0) * a * a});
  return 0.5 * ((-1.0 * kin) + pot);
}

LaurentCoeffs radial_apply(const RadialOperator &op, const QuasiPolynomial &f) {
  // First and second gauge-covariant derivatives of the polynomial part.
  auto dgauge = [&f](const LaurentCoeffs &u) {
    LaurentCoeffs r = laurent_deriv(u);
    const Gauge &g = f.gauge;
    if (g.quartic != 0.0) r = laurent_add(r, laurent_scale(-g.quartic, laurent_shift(u, 3)));
    if (g.quadratic != 0.0) r = laurent_add(r, laurent_scale(-g.quadratic, laurent_shift(u, 1)));
    if (g.linear != 0.0) r = laurent_add(r, laurent_scale(-g.linear, u));
    return r;
  };

  LaurentCoeffs p0 = to_laurent(f);
  LaurentCoeffs p1 = dgauge(p0);
  LaurentCoeffs p2 = dgauge(p1);

  LaurentCoeffs res = laurent_scale(-1.0, p2);
  if (op.drift != 0.0) res = laurent_add(res, laurent_scale(-op.drift, laurent_shift(p1, -1)));
  for (const auto &[power, coef] : op.potential) {
    if (coef == 0.0) continue;
    res = laurent_add(res, laurent_scale(coef, laurent_shift(p0, power)));
  }
  return laurent_scale(op.prefactor, res);
}

} // namespace dunkl
