#include "dunkl/sectors.hpp"

#include <cmath>

namespace dunkl {

EffectiveL line_effective_l(const DunklParams &p, const Parity &eps) {
  return EffectiveL{p.mu + static_cast<double>(eps.epsilon) - 1.0};
}

PlaneSector::PlaneSector(Parity e1, Parity e2, double nu_, double mu1_, double mu2_)
    : eps1(e1), eps2(e2), nu(nu_), mu1(mu1_), mu2(mu2_) {
  if (!(mu1 > -0.5)) throw std::invalid_argument("mu1 must be > -1/2");
  if (!(mu2 > -0.5)) throw std::invalid_argument("mu2 must be > -1/2");

  double doubled = 2.0 * nu;
  double rounded = std::round(doubled);
  if (std::fabs(doubled - rounded) > 1e-9)
    throw std::invalid_argument("nu must lie on the half-integer lattice");
  long two_nu_int = static_cast<long>(rounded);
  bool mixed = eps1.epsilon != eps2.epsilon;
  if (mixed) {
    if (two_nu_int < 1 || two_nu_int % 2 == 0)
      throw std::invalid_argument(
          "nu must be a positive half-odd integer (1/2, 3/2, ...) for mixed parities");
  } else {
    if (two_nu_int % 2 != 0)
      throw std::invalid_argument("nu must be an integer for equal parities");
    long min_nu = (eps1.epsilon == 1) ? 1 : 0;
    if (two_nu_int / 2 < min_nu)
      throw std::invalid_argument(eps1.epsilon == 1
                                      ? "nu must be a positive integer for odd-odd parities"
                                      : "nu must be a non-negative integer for even-even parities");
  }
  if (m_squared() < 0.0)
    throw std::invalid_argument("invalid sector: M^2 = 4 nu (nu + mu1 + mu2) is negative");
}

int PlaneSector::two_nu() const { return static_cast<int>(std::lround(2.0 * nu)); }

} // namespace dunkl
