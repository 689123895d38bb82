#include "dunkl/es.hpp"

#include <cmath>

namespace dunkl::es {

namespace {

// Rescale so the top coefficient is exactly 1.
std::vector<double> monic(std::vector<double> c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[static_cast<size_t>(d)] == 0.0) --d;
  double top = c[static_cast<size_t>(d)];
  for (double &x : c) x /= top;
  c.resize(static_cast<size_t>(d) + 1);
  return c;
}

} // namespace

double laguerre_eval(const LaguerreIndex &idx, double z) {
  if (idx.k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + idx.alpha - z;
  for (int j = 1; j < idx.k; ++j) {
    double next =
        ((2.0 * j + 1.0 + idx.alpha - z) * cur - (static_cast<double>(j) + idx.alpha) * prev) /
        (static_cast<double>(j) + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_coeffs(const LaguerreIndex &idx) {
  std::vector<double> prev{1.0};
  if (idx.k == 0) return prev;
  std::vector<double> cur{1.0 + idx.alpha, -1.0};
  for (int j = 1; j < idx.k; ++j) {
    std::vector<double> next(static_cast<size_t>(j) + 2, 0.0);
    double inv = 1.0 / (static_cast<double>(j) + 1.0);
    for (size_t m = 0; m < cur.size(); ++m) {
      next[m] += (2.0 * j + 1.0 + idx.alpha) * cur[m] * inv;
      next[m + 1] -= cur[m] * inv;
    }
    for (size_t m = 0; m < prev.size(); ++m)
      next[m] -= (static_cast<double>(j) + idx.alpha) * prev[m] * inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ESLevel es_line_level(const DunklParams &p, int k, const Parity &eps) {
  LaguerreIndex idx(k, p.mu - 0.5 + eps.epsilon);
  std::vector<double> lag = monic(laguerre_coeffs(idx));

  ESLevel lvl;
  lvl.k = k;
  lvl.epsilon = eps.epsilon;
  lvl.energy = 2.0 * k + eps.epsilon + p.mu + 0.5;
  std::vector<double> c(static_cast<size_t>(2 * k + eps.epsilon) + 1, 0.0);
  for (int j = 0; j <= k; ++j)
    c[static_cast<size_t>(2 * j + eps.epsilon)] = lag[static_cast<size_t>(j)];
  lvl.wavefunction = QuasiPolynomial{Gauge{0.0, 1.0, 0.0}, std::move(c)};
  return lvl;
}

ESLevel es_plane_oscillator_level(const PlaneSector &sector, int k) {
  if (k < 0) throw std::invalid_argument("k must be a non-negative integer");
  LaguerreIndex idx(k, 2.0 * sector.nu + sector.mu1 + sector.mu2);
  std::vector<double> lag = monic(laguerre_coeffs(idx));

  ESLevel lvl;
  lvl.k = k;
  lvl.energy = 2.0 * k + 2.0 * sector.nu + sector.mu1 + sector.mu2 + 1.0;
  int base = sector.two_nu();
  std::vector<double> c(static_cast<size_t>(base + 2 * k) + 1, 0.0);
  for (int j = 0; j <= k; ++j)
    c[static_cast<size_t>(base + 2 * j)] = lag[static_cast<size_t>(j)];
  lvl.wavefunction = QuasiPolynomial{Gauge{0.0, 1.0, 0.0}, std::move(c)};
  return lvl;
}

ESLevel es_plane_coulomb_level(const PlaneSector &sector, int k, double alpha_coupling) {
  if (k < 0) throw std::invalid_argument("k must be a non-negative integer");
  if (!(alpha_coupling > 0.0)) throw std::invalid_argument("alpha must be > 0");
  double bign = k + 2.0 * sector.nu + sector.mu1 + sector.mu2 + 0.5;
  double energy = -alpha_coupling * alpha_coupling / (8.0 * bign * bign);
  double beta = alpha_coupling / bign;

  LaguerreIndex idx(k, 4.0 * sector.nu + 2.0 * sector.mu1 + 2.0 * sector.mu2);
  std::vector<double> lag = laguerre_coeffs(idx);

  ESLevel lvl;
  lvl.k = k;
  lvl.energy = energy;
  lvl.beta = beta;
  int base = sector.two_nu();
  std::vector<double> c(static_cast<size_t>(base + k) + 1, 0.0);
  // (beta rho)^{2nu} L_k(beta rho) expanded in plain powers of rho.
  for (int j = 0; j <= k; ++j)
    c[static_cast<size_t>(base + j)] =
        lag[static_cast<size_t>(j)] * std::pow(beta, base + j);
  lvl.wavefunction = QuasiPolynomial{Gauge{0.0, 0.0, 0.5 * beta}, monic(std::move(c))};
  return lvl;
}

Radial3DLevel radial_oscillator_3d_level(double l, int k) {
  if (k < 0) throw std::invalid_argument("k must be a non-negative integer");
  if (!(l > -1.5)) throw std::invalid_argument("l must be > -3/2");
  Radial3DLevel lvl;
  lvl.energy = 2.0 * (2.0 * k + l + 1.5);
  lvl.leading_power = l + 1.0;
  lvl.poly_z = monic(laguerre_coeffs(LaguerreIndex(k, l + 0.5)));
  return lvl;
}

} // namespace dunkl::es
