#include "dunkl/quasipoly.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl {

namespace {

void check_same_gauge(const Gauge &a, const Gauge &b) {
  if (!(a == b))
    throw std::invalid_argument("gauge mismatch: operands carry different gauge factors");
}

} // namespace

int QuasiPolynomial::degree() const {
  for (int m = static_cast<int>(coeffs.size()) - 1; m >= 0; --m)
    if (coeffs[static_cast<size_t>(m)] != 0.0) return m;
  return -1;
}

double QuasiPolynomial::max_abs_coeff() const {
  double mx = 0.0;
  for (double c : coeffs) mx = std::max(mx, std::fabs(c));
  return mx;
}

double QuasiPolynomial::poly_eval(double x) const { return dunkl::poly_eval(coeffs, x); }

bool QuasiPolynomial::has_parity(int epsilon) const {
  for (size_t m = 0; m < coeffs.size(); ++m)
    if (static_cast<int>(m % 2) != (epsilon % 2) && coeffs[m] != 0.0) return false;
  return true;
}

QuasiPolynomial operator+(const QuasiPolynomial &f, const QuasiPolynomial &g) {
  check_same_gauge(f.gauge, g.gauge);
  QuasiPolynomial r{f.gauge, std::vector<double>(std::max(f.coeffs.size(), g.coeffs.size()), 0.0)};
  for (size_t m = 0; m < r.coeffs.size(); ++m)
    r.coeffs[m] = f.coeff(static_cast<int>(m)) + g.coeff(static_cast<int>(m));
  return r;
}

QuasiPolynomial operator-(const QuasiPolynomial &f, const QuasiPolynomial &g) {
  return f + (-1.0 * g);
}

QuasiPolynomial operator*(double s, const QuasiPolynomial &f) {
  QuasiPolynomial r = f;
  for (double &c : r.coeffs) c *= s;
  return r;
}

QuasiPolynomial reflect(const QuasiPolynomial &f) {
  QuasiPolynomial r = f;
  r.gauge.linear = -r.gauge.linear;
  for (size_t m = 1; m < r.coeffs.size(); m += 2) r.coeffs[m] = -r.coeffs[m];
  return r;
}

QuasiPolynomial mul_power(const QuasiPolynomial &f, int k) {
  if (k < 0) throw std::invalid_argument("mul_power: negative power");
  QuasiPolynomial r{f.gauge, std::vector<double>(f.coeffs.size() + static_cast<size_t>(k), 0.0)};
  for (size_t m = 0; m < f.coeffs.size(); ++m) r.coeffs[m + static_cast<size_t>(k)] = f.coeffs[m];
  return r;
}

QuasiPolynomial mul_poly(const QuasiPolynomial &f, const std::vector<double> &p) {
  return QuasiPolynomial{f.gauge, poly_mul(f.coeffs, p)};
}

QuasiPolynomial derivative(const QuasiPolynomial &f) {
  // (G P)' = G (P' - m'(x) P), m'(x) = quartic x^3 + quadratic x + linear.
  std::vector<double> chain{f.gauge.linear, f.gauge.quadratic, 0.0, f.gauge.quartic};
  std::vector<double> res = poly_deriv(f.coeffs);
  std::vector<double> drag = poly_mul(f.coeffs, chain);
  res.resize(std::max(res.size(), drag.size()), 0.0);
  for (size_t m = 0; m < drag.size(); ++m) res[m] -= drag[m];
  return QuasiPolynomial{f.gauge, std::move(res)};
}

std::vector<double> poly_mul(const std::vector<double> &p, const std::vector<double> &q) {
  if (p.empty() || q.empty()) return {};
  std::vector<double> r(p.size() + q.size() - 1, 0.0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

std::vector<double> poly_deriv(const std::vector<double> &p) {
  if (p.size() <= 1) return {};
  std::vector<double> r(p.size() - 1, 0.0);
  for (size_t m = 1; m < p.size(); ++m) r[m - 1] = static_cast<double>(m) * p[m];
  return r;
}

double poly_eval(const std::vector<double> &p, double x) {
  double v = 0.0;
  for (size_t m = p.size(); m-- > 0;) v = v * x + p[m];
  return v;
}

LaurentCoeffs to_laurent(const QuasiPolynomial &f) { return LaurentCoeffs{0, f.coeffs}; }

LaurentCoeffs laurent_add(const LaurentCoeffs &u, const LaurentCoeffs &v) {
  if (u.c.empty()) return v;
  if (v.c.empty()) return u;
  int lo = std::min(u.lo, v.lo);
  int hi = std::max(u.max_power(), v.max_power());
  LaurentCoeffs r{lo, std::vector<double>(static_cast<size_t>(hi - lo + 1), 0.0)};
  for (int p = lo; p <= hi; ++p) r.c[static_cast<size_t>(p - lo)] = u.coeff(p) + v.coeff(p);
  return r;
}

LaurentCoeffs laurent_scale(double s, const LaurentCoeffs &u) {
  LaurentCoeffs r = u;
  for (double &c : r.c) c *= s;
  return r;
}

LaurentCoeffs laurent_shift(const LaurentCoeffs &u, int k) {
  LaurentCoeffs r = u;
  r.lo += k;
  return r;
}

LaurentCoeffs laurent_deriv(const LaurentCoeffs &u) {
  LaurentCoeffs r{u.lo - 1, std::vector<double>(u.c.size(), 0.0)};
  for (size_t i = 0; i < u.c.size(); ++i)
    r.c[i] = static_cast<double>(u.lo + static_cast<int>(i)) * u.c[i];
  return r;
}

double laurent_max_abs(const LaurentCoeffs &u) {
  double mx = 0.0;
  for (double c : u.c) mx = std::max(mx, std::fabs(c));
  return mx;
}

GridFunction sample_symmetric(const QuasiPolynomial &f, double half_width, int npoints) {
  if (npoints < 2) throw std::invalid_argument("sample_symmetric: need at least 2 points");
  GridFunction g;
  g.x.resize(static_cast<size_t>(npoints));
  g.values.resize(static_cast<size_t>(npoints));
  for (int i = 0; i < npoints; ++i) {
    double x = -half_width + 2.0 * half_width * static_cast<double>(i) / (npoints - 1);
    g.x[static_cast<size_t>(i)] = x;
    g.values[static_cast<size_t>(i)] = f.eval(x);
  }
  return g;
}

GridFunction reflect(const GridFunction &f) {
  size_t n = f.x.size();
  double span = n ? std::max(std::fabs(f.x.front()), std::fabs(f.x.back())) : 0.0;
  for (size_t i = 0; i < n; ++i)
    if (std::fabs(f.x[i] + f.x[n - 1 - i]) > 1e-12 * std::max(1.0, span))
      throw std::invalid_argument("grid not reflection-closed");
  GridFunction r = f;
  std::reverse(r.values.begin(), r.values.end());
  return r;
}

} // namespace dunkl
