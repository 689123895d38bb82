#include "dunkl/qes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dunkl::qes {

namespace {

constexpr double kDegenerateTol = 1e-13;

void check_common(const GaugeParams &g, int n) {
  if (n < 0) throw std::invalid_argument("n must be a non-negative integer");
  if (g.a < 0.0) throw std::invalid_argument("not QES-normalizable: a must be >= 0");
  if (g.a == 0.0 && !(g.b > 0.0))
    throw std::invalid_argument("not QES-normalizable: b must be > 0 when a = 0");
}

// Make the polynomial monic (or scale by the largest entry when the top
// coefficient has effectively vanished), flagging the degenerate case.
// Exact trailing zeros are structure, not degeneracy: the a = 0 triangular
// eigenvectors end at degree k by construction.
bool normalize_poly(std::vector<double> &c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  double mx = 0.0;
  for (double v : c) mx = std::max(mx, std::fabs(v));
  double top = c.back();
  if (mx == 0.0) return true;
  if (std::fabs(top) < kDegenerateTol * mx) {
    double pivot = 0.0;
    for (double v : c)
      if (std::fabs(v) > std::fabs(pivot)) pivot = v;
    for (double &v : c) v /= pivot;
    return true;
  }
  for (double &v : c) v /= top;
  return false;
}

QuasiPolynomial assemble_wavefunction(const Gauge &gauge, const std::vector<double> &poly,
                                      int base_power, int stride) {
  std::vector<double> c(
      static_cast<size_t>(base_power + stride * (static_cast<int>(poly.size()) - 1)) + 1, 0.0);
  for (size_t j = 0; j < poly.size(); ++j)
    c[static_cast<size_t>(base_power) + stride * j] = poly[j];
  return QuasiPolynomial{gauge, std::move(c)};
}

} // namespace

QESBlock build_oscillator_block(const EffectiveL &l, const GaugeParams &g, int n) {
  check_common(g, n);
  if (!(l.l > -1.5)) throw std::invalid_argument("effective l must be > -3/2");
  QESBlock b;
  b.size = n + 1;
  b.kind = BlockKind::oscillator;
  b.diag.resize(static_cast<size_t>(n) + 1);
  b.sub.resize(static_cast<size_t>(n));
  b.sup.resize(static_cast<size_t>(n));
  for (int k = 0; k <= n; ++k)
    b.diag[static_cast<size_t>(k)] = g.b * (4.0 * k + 2.0 * l.l + 3.0);
  for (int k = 0; k < n; ++k) {
    b.sub[static_cast<size_t>(k)] = 4.0 * g.a * (k - n);
    b.sup[static_cast<size_t>(k)] = -2.0 * (k + 1.0) * (2.0 * k + 2.0 * l.l + 3.0);
  }
  return b;
}

QESBlock build_coulomb_block(const EffectiveL &l, const GaugeParams &g, int n) {
  check_common(g, n);
  if (!(l.l > -1.0)) throw std::invalid_argument("effective l must be > -1 for the Coulomb family");
  QESBlock b;
  b.size = n + 1;
  b.kind = BlockKind::coulomb;
  b.diag.resize(static_cast<size_t>(n) + 1);
  b.sub.resize(static_cast<size_t>(n));
  b.sup.resize(static_cast<size_t>(n));
  for (int k = 0; k <= n; ++k) b.diag[static_cast<size_t>(k)] = 2.0 * g.b * k;
  for (int k = 0; k < n; ++k) {
    b.sub[static_cast<size_t>(k)] = 2.0 * g.a * (k - n);
    b.sup[static_cast<size_t>(k)] = -(k + 1.0) * (k + 2.0 * l.l + 2.0);
  }
  return b;
}

SymmetrizedBlock symmetrize(const QESBlock &block) {
  SymmetrizedBlock s;
  s.t.diag = block.diag;
  s.t.off.resize(block.sub.size());
  s.scale.assign(block.diag.size(), 1.0);
  for (size_t k = 0; k < block.sub.size(); ++k) {
    double prod = block.sub[k] * block.sup[k];
    if (!(prod > 0.0)) throw std::invalid_argument("block not symmetrizable");
    double root = std::sqrt(prod);
    s.t.off[k] = root;
    s.scale[k + 1] = s.scale[k] * block.sub[k] / root;
  }
  return s;
}

BlockEigen solve_block(const QESBlock &block) {
  const int n1 = block.size;
  BlockEigen out;

  bool triangular = true;
  for (double s : block.sub) triangular = triangular && s == 0.0;

  if (triangular) {
    // a = 0: eigenvalues sit on the diagonal and the eigenvectors follow by
    // back substitution (the diagonal is strictly increasing since b > 0).
    out.values = block.diag;
    out.vectors.assign(static_cast<size_t>(n1), std::vector<double>(static_cast<size_t>(n1), 0.0));
    for (int j = 0; j < n1; ++j) {
      auto &v = out.vectors[static_cast<size_t>(j)];
      v[static_cast<size_t>(j)] = 1.0;
      for (int k = j - 1; k >= 0; --k)
        v[static_cast<size_t>(k)] = -block.sup[static_cast<size_t>(k)] *
                                    v[static_cast<size_t>(k + 1)] /
                                    (block.diag[static_cast<size_t>(k)] -
                                     block.diag[static_cast<size_t>(j)]);
    }
    return out;
  }

  SymmetrizedBlock sym = symmetrize(block);
  TridiagEigen eig = eig_tridiag(sym.t);
  out.values = eig.values;
  out.vectors.resize(static_cast<size_t>(n1));
  for (int j = 0; j < n1; ++j) {
    std::vector<double> v(static_cast<size_t>(n1));
    for (int k = 0; k < n1; ++k)
      v[static_cast<size_t>(k)] =
          sym.scale[static_cast<size_t>(k)] * eig.vectors[static_cast<size_t>(j)][static_cast<size_t>(k)];
    out.vectors[static_cast<size_t>(j)] = std::move(v);
  }
  return out;
}

std::vector<QESSolution> solve_line_qes(const DunklParams &p, const Parity &eps,
                                        const GaugeParams &g, int n) {
  EffectiveL l = line_effective_l(p, eps);
  QESBlock block = build_oscillator_block(l, g, n);
  BlockEigen eig = solve_block(block);

  std::vector<QESSolution> out(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    QESSolution &s = out[static_cast<size_t>(j)];
    s.family = Family::line_oscillator;
    s.index = j;
    s.n = n;
    s.energy = 0.5 * eig.values[static_cast<size_t>(j)];
    s.poly = eig.vectors[static_cast<size_t>(j)];
    s.degenerate_degree = normalize_poly(s.poly);
    s.wavefunction = assemble_wavefunction(oscillator_gauge(g), s.poly, eps.epsilon, 2);
    s.effective_l = l.l;
  }
  return out;
}

std::vector<QESSolution> solve_plane_oscillator_qes(const PlaneSector &sector,
                                                    const GaugeParams &g, int n) {
  EffectiveL l = sector.effective_l();
  QESBlock block = build_oscillator_block(l, g, n);
  BlockEigen eig = solve_block(block);

  std::vector<QESSolution> out(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    QESSolution &s = out[static_cast<size_t>(j)];
    s.family = Family::plane_oscillator;
    s.index = j;
    s.n = n;
    s.energy = 0.5 * eig.values[static_cast<size_t>(j)];
    s.poly = eig.vectors[static_cast<size_t>(j)];
    s.degenerate_degree = normalize_poly(s.poly);
    s.wavefunction = assemble_wavefunction(oscillator_gauge(g), s.poly, sector.two_nu(), 2);
    s.effective_l = l.l;
  }
  return out;
}

std::vector<QESSolution> solve_plane_coulomb_qes(const PlaneSector &sector, const GaugeParams &g,
                                                 int n) {
  EffectiveL l = sector.effective_l();
  QESBlock block = build_coulomb_block(l, g, n);
  BlockEigen eig = solve_block(block);
  const double energy =
      g.a * (n + 2.0 * sector.nu + sector.mu1 + sector.mu2 + 1.0) - 0.5 * g.b * g.b;

  std::vector<QESSolution> out(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    QESSolution &s = out[static_cast<size_t>(j)];
    s.family = Family::plane_coulomb;
    s.index = j;
    s.n = n;
    s.energy = energy;
    s.alpha = eig.values[static_cast<size_t>(j)];
    s.poly = eig.vectors[static_cast<size_t>(j)];
    s.degenerate_degree = normalize_poly(s.poly);
    s.wavefunction = assemble_wavefunction(coulomb_gauge(g), s.poly, sector.two_nu(), 1);
    s.effective_l = l.l;
  }
  return out;
}

namespace {

std::vector<QESSolution> closed_form_oscillator(Family family, double lsum, const GaugeParams &g,
                                                int n, const Gauge &gauge, int base, int stride,
                                                double effective_l) {
  // lsum = l + 3/2 (= mu+eps+1/2 on the line, 2nu+mu1+mu2+1 in the plane).
  check_common(g, n);
  if (n >= 2) throw std::invalid_argument("no closed form available for n >= 2");
  std::vector<QESSolution> out;
  if (n == 0) {
    QESSolution s;
    s.family = family;
    s.index = 0;
    s.n = 0;
    s.energy = lsum * g.b;
    s.poly = {1.0};
    s.wavefunction = assemble_wavefunction(gauge, s.poly, base, stride);
    s.provenance = Provenance::closed_form;
    s.effective_l = effective_l;
    out.push_back(std::move(s));
    return out;
  }
  if (!(g.a > 0.0))
    throw std::invalid_argument("not QES-normalizable: the n = 1 closed form requires a > 0");
  double root = std::sqrt(g.b * g.b + 2.0 * g.a * (2.0 * lsum));
  for (int k = 0; k <= 1; ++k) {
    double sign = (k == 0) ? 1.0 : -1.0; // energy -root pairs with +root in the polynomial
    QESSolution s;
    s.family = family;
    s.index = k;
    s.n = 1;
    s.energy = (lsum + 1.0) * g.b - sign * root;
    s.poly = {(g.b + sign * root) / (2.0 * g.a), 1.0};
    s.wavefunction = assemble_wavefunction(gauge, s.poly, base, stride);
    s.provenance = Provenance::closed_form;
    s.effective_l = effective_l;
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace

std::vector<QESSolution> closed_form_line(const DunklParams &p, const Parity &eps,
                                          const GaugeParams &g, int n) {
  double lsum = p.mu + eps.epsilon + 0.5;
  return closed_form_oscillator(Family::line_oscillator, lsum, g, n, oscillator_gauge(g),
                                eps.epsilon, 2, line_effective_l(p, eps).l);
}

std::vector<QESSolution> closed_form_plane_oscillator(const PlaneSector &sector,
                                                      const GaugeParams &g, int n) {
  double lsum = 2.0 * sector.nu + sector.mu1 + sector.mu2 + 1.0;
  return closed_form_oscillator(Family::plane_oscillator, lsum, g, n, oscillator_gauge(g),
                                sector.two_nu(), 2, sector.effective_l().l);
}

std::vector<QESSolution> closed_form_plane_coulomb(const PlaneSector &sector,
                                                   const GaugeParams &g, int n) {
  check_common(g, n);
  if (n >= 2) throw std::invalid_argument("no closed form available for n >= 2");
  EffectiveL l = sector.effective_l();
  if (!(l.l > -1.0)) throw std::invalid_argument("effective l must be > -1 for the Coulomb family");

  std::vector<QESSolution> out;
  double base_energy = g.a * (2.0 * sector.nu + sector.mu1 + sector.mu2 + 1.0) - 0.5 * g.b * g.b;
  if (n == 0) {
    QESSolution s;
    s.family = Family::plane_coulomb;
    s.index = 0;
    s.n = 0;
    s.energy = base_energy;
    s.alpha = 0.0;
    s.poly = {1.0};
    s.wavefunction = assemble_wavefunction(coulomb_gauge(g), s.poly, sector.two_nu(), 1);
    s.provenance = Provenance::closed_form;
    s.effective_l = l.l;
    out.push_back(std::move(s));
    return out;
  }
  if (!(g.a > 0.0))
    throw std::invalid_argument("not QES-normalizable: the n = 1 closed form requires a > 0");
  double root = std::sqrt(g.b * g.b + 2.0 * g.a * (2.0 * l.l + 2.0));
  for (int k = 0; k <= 1; ++k) {
    // alpha = b - root carries the nodeless polynomial 2a rho + b + root;
    // alpha = b + root carries the single-node one.
    double sign = (k == 0) ? 1.0 : -1.0;
    QESSolution s;
    s.family = Family::plane_coulomb;
    s.index = k;
    s.n = 1;
    s.energy = base_energy + g.a;
    s.alpha = g.b - sign * root;
    s.poly = {(g.b + sign * root) / (2.0 * g.a), 1.0};
    s.wavefunction = assemble_wavefunction(coulomb_gauge(g), s.poly, sector.two_nu(), 1);
    s.provenance = Provenance::closed_form;
    s.effective_l = l.l;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<double> line_potential(const DunklParams &p, const Parity &eps, const GaugeParams &g,
                                   int n, const std::vector<double> &x) {
  const double a = g.a, b = g.b;
  const double quad = b * b - (2.0 * p.mu + 4.0 + 4.0 * n - eps.reflection_eigenvalue()) * a;
  std::vector<double> v(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    double x2 = x[i] * x[i];
    v[i] = 0.5 * (a * a * x2 * x2 * x2 + 2.0 * a * b * x2 * x2 + quad * x2);
  }
  return v;
}

std::vector<double> plane_oscillator_potential(const PlaneSector &sector, const GaugeParams &g,
                                               int n, const std::vector<double> &rho) {
  const double a = g.a, b = g.b;
  const double quad =
      b * b - (4.0 * sector.nu + 2.0 * sector.mu1 + 2.0 * sector.mu2 + 4.0 + 4.0 * n) * a;
  const double m2 = sector.m_squared();
  std::vector<double> v(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) {
    double r = rho[i], r2 = r * r;
    if (r == 0.0 && m2 != 0.0) {
      v[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    double cent = (m2 == 0.0) ? 0.0 : m2 / r2;
    v[i] = 0.5 * (a * a * r2 * r2 * r2 + 2.0 * a * b * r2 * r2 + quad * r2 + cent);
  }
  return v;
}

std::vector<double> plane_coulomb_potential(const PlaneSector &sector, const GaugeParams &g,
                                            int n, double alpha_k, const std::vector<double> &rho) {
  (void)n;
  const double a = g.a, b = g.b;
  const double coul = b * (4.0 * sector.nu + 2.0 * sector.mu1 + 2.0 * sector.mu2 + 1.0) + alpha_k;
  const double m2 = sector.m_squared();
  std::vector<double> v(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) {
    double r = rho[i];
    if (r == 0.0) {
      v[i] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    v[i] = 0.5 * (a * a * r * r + 2.0 * a * b * r - coul / r + m2 / (r * r));
  }
  return v;
}

LaurentCoeffs plane_oscillator_apply(const PlaneSector &sector, const GaugeParams &g, int n,
                                     const QuasiPolynomial &f) {
  const double a = g.a, b = g.b;
  RadialOperator op;
  op.drift = sector.drift_weight();
  op.potential = {
      {6, a * a},
      {4, 2.0 * a * b},
      {2, b * b - (4.0 * sector.nu + 2.0 * sector.mu1 + 2.0 * sector.mu2 + 4.0 + 4.0 * n) * a},
      {-2, sector.m_squared()}};
  return radial_apply(op, f);
}

LaurentCoeffs plane_coulomb_apply(const PlaneSector &sector, const GaugeParams &g, int n,
                                  double alpha_k, const QuasiPolynomial &f) {
  (void)n;
  const double a = g.a, b = g.b;
  RadialOperator op;
  op.drift = sector.drift_weight();
  op.potential = {
      {2, a * a},
      {1, 2.0 * a * b},
      {-1, -(b * (4.0 * sector.nu + 2.0 * sector.mu1 + 2.0 * sector.mu2 + 1.0) + alpha_k)},
      {-2, sector.m_squared()}};
  return radial_apply(op, f);
}

LaurentCoeffs plane_oscillator_es_apply(const PlaneSector &sector, const QuasiPolynomial &f) {
  RadialOperator op;
  op.drift = sector.drift_weight();
  op.potential = {{2, 1.0}, {-2, sector.m_squared()}};
  return radial_apply(op, f);
}

LaurentCoeffs plane_coulomb_es_apply(const PlaneSector &sector, double alpha_coupling,
                                     const QuasiPolynomial &f) {
  RadialOperator op;
  op.drift = sector.drift_weight();
  op.potential = {{-1, -alpha_coupling}, {-2, sector.m_squared()}};
  return radial_apply(op, f);
}

std::vector<double> positive_roots(const std::vector<double> &poly) {
  double mx = 0.0;
  for (double c : poly) mx = std::max(mx, std::fabs(c));
  if (mx == 0.0) return {};

  // Strip numerically dead leading/trailing coefficients; a root at 0 is not
  // a positive root, so trailing (low-order) zeros just shift the polynomial.
  std::vector<double> c = poly;
  while (c.size() > 1 && std::fabs(c.back()) < 1e-12 * mx) c.pop_back();
  size_t low = 0;
  while (low < c.size() && std::fabs(c[low]) < 1e-12 * mx) ++low;
  c.erase(c.begin(), c.begin() + static_cast<long>(low));
  if (c.size() <= 1) return {};

  double top = std::fabs(c.back()), bottom = std::fabs(c.front());
  double hi = 0.0, lo_ratio = 0.0;
  for (size_t i = 0; i + 1 < c.size(); ++i) hi = std::max(hi, std::fabs(c[i]) / top);
  for (size_t i = 1; i < c.size(); ++i) lo_ratio = std::max(lo_ratio, std::fabs(c[i]) / bottom);
  double rmax = 2.0 * (1.0 + hi);
  double rmin = 0.5 / (1.0 + lo_ratio);

  const int samples = 4096;
  std::vector<double> roots;
  double ratio = std::pow(rmax / rmin, 1.0 / samples);
  double x_prev = rmin;
  double f_prev = poly_eval(c, x_prev);
  for (int i = 1; i <= samples; ++i) {
    double x = rmin * std::pow(ratio, i);
    double fx = poly_eval(c, x);
    if (f_prev == 0.0) {
      roots.push_back(x_prev);
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
      double a = x_prev, b = x;
      for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        double fm = poly_eval(c, m);
        if (fm == 0.0 || std::signbit(fm) == std::signbit(poly_eval(c, a)))
          a = m;
        else
          b = m;
        if (b - a <= 1e-14 * b) break;
      }
      roots.push_back(0.5 * (a + b));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

} // namespace dunkl::qes
