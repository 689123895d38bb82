#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/es.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/qes.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace dunkl;
using namespace dunkl::oracle;
using testutil::Rng;

TEST_CASE("radial grid invariants") {
  CHECK_THROWS_AS(RadialGrid(8.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid(-1.0, 400), std::invalid_argument);
  RadialGrid g(8.0, 399);
  CHECK(g.h() == doctest::Approx(0.02));
  CHECK(g.rmin() == g.h());
  RadialGrid f = g.refined();
  CHECK(f.npoints == 799);
  CHECK(f.h() == doctest::Approx(0.01));
  // nodes nest: every coarse node is a fine node
  CHECK(f.node(1) == doctest::Approx(g.node(0)));
}

TEST_CASE("FD oracle on the l = 0 radial oscillator") {
  auto veff = es_oscillator_gauged_potential(0.0);
  RadialGrid grid(10.0, 2000);
  RichardsonEigen rich = fd_eigen_richardson(veff, grid, 3);
  // E_k = 2(2k + 3/2) = 3, 7, 11
  CHECK(std::fabs(rich.extrapolated[0] - 3.0) <= 1e-6);
  CHECK(std::fabs(rich.extrapolated[1] - 7.0) <= 1e-6);
  CHECK(std::fabs(rich.extrapolated[2] - 11.0) <= 1e-6);
  // error estimates are honest bounds at this resolution
  CHECK(rich.error_estimate[0] <= 1e-4);
}

TEST_CASE("FD oracle reproduces the QES oscillator block eigenvalues") {
  // the decisive independent check: n=1, l=0, a=1/2, b=1 -> gauged {1, 9}
  DunklParams mu(1.0);
  GaugeParams g{0.5, 1.0};
  auto veff = line_gauged_potential(mu, Parity(0), g, 1);
  RichardsonEigen rich = fd_eigen_richardson(veff, default_oscillator_grid(g), 2);
  CHECK(std::fabs(rich.extrapolated[0] - 1.0) <= 1e-5);
  CHECK(std::fabs(rich.extrapolated[1] - 9.0) <= 1e-5);
}

TEST_CASE("FD oracle confirms the fixed Coulomb energy") {
  // n=0, l=1 sector, a=1, b=1, alpha_0=0: E = a(2n+2l+3) - b^2 = 4
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  GaugeParams g{1.0, 1.0};
  auto veff = plane_coulomb_gauged_potential(s, g, 0, 0.0);
  RichardsonEigen rich = fd_eigen_richardson(veff, default_coulomb_grid(g), 1);
  CHECK(std::fabs(rich.extrapolated[0] - 4.0) <= 1e-5);
}

TEST_CASE("FD convergence order is two") {
  auto veff = es_oscillator_gauged_potential(1.0);
  double order = fd_convergence_order(veff, RadialGrid(10.0, 1000), 0);
  CHECK(order > 1.8);
  CHECK(order < 2.2);
}

TEST_CASE("FD oracle anchors the plane oscillator ground sector") {
  // nu=1/2, mu1=mu2=1/4 maps to l = 1; the radial equation's lowest level is
  // 2 nu + mu1 + mu2 + 1 = 2.5, i.e. 5 in the gauged convention.
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  auto veff = es_oscillator_gauged_potential(s.effective_l().l);
  RichardsonEigen rich = fd_eigen_richardson(veff, RadialGrid(10.0, 2000), 1);
  double expect = 2.0 * es::es_plane_oscillator_level(s, 0).energy;
  CHECK(std::fabs(rich.extrapolated[0] - expect) <= 1e-6);
}

TEST_CASE("FD oracle on the exactly solvable Dunkl Coulomb problem") {
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  es::ESLevel lvl = es::es_plane_coulomb_level(s, 0, 2.0);
  CHECK(lvl.energy == doctest::Approx(-0.125));
  auto veff = es_coulomb_gauged_potential(s, 2.0);
  RichardsonEigen rich = fd_eigen_richardson(veff, default_es_coulomb_grid(lvl.beta), 1);
  CHECK(std::fabs(rich.extrapolated[0] - 2.0 * lvl.energy) <= 1e-5);
}

TEST_CASE("FD error conditions") {
  RadialGrid g(5.0, 300);
  double pole = g.node(3);
  CHECK_THROWS_AS(fd_eigen_radial([](double r) { return r; }, g, 400), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigen_radial([pole](double r) { return 1.0 / (r - pole); }, g, 1),
                  std::runtime_error);
}

TEST_CASE("quadrature against gamma-function closed forms") {
  // int_0^inf x^w e^{-c x^2} dx = Gamma((w+1)/2) / (2 c^((w+1)/2));
  // negative exponents exercise the singular-weight ladder
  for (double w : {-0.9, -0.8, -0.5, 0.0, 0.5, 2.0, 6.0}) {
    for (double c : {0.5, 1.0, 2.0}) {
      QuasiPolynomial f{Gauge{0.0, c, 0.0}, {1.0}};
      double got = weighted_inner_product(f, f, Weight{Weight::Kind::radial, w});
      double expect = std::tgamma(0.5 * (w + 1.0)) / (2.0 * std::pow(c, 0.5 * (w + 1.0)));
      CHECK(std::fabs(got - expect) <= 1e-10 * expect);
    }
  }
  // Laguerre-weight integrals: int_0^inf x^(k+alpha) e^{-x} dx = Gamma(k+alpha+1)
  for (int k : {0, 1, 3, 6}) {
    for (double alpha : {0.0, 0.5, 1.0}) {
      std::vector<double> mono(static_cast<size_t>(k) + 1, 0.0);
      mono.back() = 1.0;
      QuasiPolynomial f{Gauge{0.0, 0.0, 0.5}, mono};
      double got = weighted_inner_product(f, f, Weight{Weight::Kind::radial, alpha});
      double expect = std::tgamma(2.0 * k + alpha + 1.0);
      CHECK(std::fabs(got - expect) <= 1e-10 * expect);
    }
  }
}

TEST_CASE("weighted inner products: parity, orthogonality, positivity") {
  DunklParams mu(1.0);
  Weight w{Weight::Kind::line, 2.0 * mu.mu};
  es::ESLevel psi0 = es::es_line_level(mu, 0, Parity(0));
  es::ESLevel psi1 = es::es_line_level(mu, 0, Parity(1)); // level 2k+eps = 1
  es::ESLevel psi2 = es::es_line_level(mu, 1, Parity(0)); // level 2
  double n0 = weighted_norm(psi0.wavefunction, w);
  double n1 = weighted_norm(psi1.wavefunction, w);
  double n2 = weighted_norm(psi2.wavefunction, w);
  CHECK(n0 > 0.0);
  // parity-forced and Laguerre orthogonality
  CHECK(std::fabs(weighted_inner_product(psi0.wavefunction, psi1.wavefunction, w)) <=
        1e-9 * n0 * n1);
  CHECK(std::fabs(weighted_inner_product(psi0.wavefunction, psi2.wavefunction, w)) <=
        1e-9 * n0 * n2);

  // non-decaying integrands are rejected
  QuasiPolynomial bare{Gauge{}, {1.0}};
  CHECK_THROWS_WITH_AS(weighted_inner_product(bare, bare, w), "divergent inner product",
                       std::runtime_error);

  // orthogonality survives a nearly singular measure (mu close to -1/2)
  DunklParams mu_sing(-0.45);
  Weight wsing{Weight::Kind::line, 2.0 * mu_sing.mu};
  auto p0 = es::es_line_level(mu_sing, 0, Parity(0)).wavefunction;
  auto p2 = es::es_line_level(mu_sing, 1, Parity(0)).wavefunction;
  CHECK(std::fabs(weighted_inner_product(p0, p2, wsing)) <=
        1e-9 * weighted_norm(p0, wsing) * weighted_norm(p2, wsing));
}

TEST_CASE("ES orthogonality under the weighted measures") {
  // line sector, several levels of one Hamiltonian
  DunklParams mu(0.6);
  Weight wline{Weight::Kind::line, 2.0 * mu.mu};
  std::vector<QuasiPolynomial> levels;
  for (int k : {0, 1, 2})
    for (int eps : {0, 1}) levels.push_back(es::es_line_level(mu, k, Parity(eps)).wavefunction);
  for (size_t i = 0; i < levels.size(); ++i)
    for (size_t j = i + 1; j < levels.size(); ++j) {
      double ip = weighted_inner_product(levels[i], levels[j], wline);
      CHECK(std::fabs(ip) <=
            1e-9 * weighted_norm(levels[i], wline) * weighted_norm(levels[j], wline));
    }

  // plane radial measure rho^(2mu1+2mu2+1)
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  Weight wrad{Weight::Kind::radial, s.drift_weight()};
  for (int ka = 0; ka < 3; ++ka)
    for (int kb = ka + 1; kb < 3; ++kb) {
      auto fa = es::es_plane_oscillator_level(s, ka).wavefunction;
      auto fb = es::es_plane_oscillator_level(s, kb).wavefunction;
      CHECK(std::fabs(weighted_inner_product(fa, fb, wrad)) <=
            1e-9 * weighted_norm(fa, wrad) * weighted_norm(fb, wrad));
    }

  // ES Coulomb levels share one potential and stay orthogonal across their
  // different exponential scales
  for (int ka = 0; ka < 2; ++ka) {
    auto fa = es::es_plane_coulomb_level(s, ka, 2.0).wavefunction;
    auto fb = es::es_plane_coulomb_level(s, ka + 1, 2.0).wavefunction;
    CHECK(std::fabs(weighted_inner_product(fa, fb, wrad)) <=
          1e-9 * weighted_norm(fa, wrad) * weighted_norm(fb, wrad));
  }
}

TEST_CASE("residual meter: acceptance bar and sensitivity") {
  DunklParams mu(0.8);
  GaugeParams g{0.7, 0.5};
  auto sols = qes::solve_line_qes(mu, Parity(0), g, 2);
  auto apply = [&](const QuasiPolynomial &psi) {
    return to_laurent(line_hamiltonian_apply(mu, g, 2, psi, LineHamiltonianForm::direct));
  };
  for (const auto &s : sols) {
    CHECK(residual_meter(apply, s.wavefunction, s.energy) <= 1e-11);
    // a deliberately perturbed energy is loudly visible
    CHECK(residual_meter(apply, s.wavefunction, s.energy + 0.1) > 1e-3);
  }
  QuasiPolynomial zero{Gauge{}, {0.0}};
  CHECK_THROWS_AS(residual_meter(apply, zero, 1.0), std::invalid_argument);
}

TEST_CASE("position audit: line QES levels are the sector's lowest pair") {
  PositionAudit audit = audit_line(DunklParams(1.0), Parity(0), GaugeParams{0.5, 1.0}, 1);
  REQUIRE(audit.positions.size() == 2);
  CHECK(audit.positions[0] == 1);
  CHECK(audit.positions[1] == 2);
  CHECK(audit.all_among_lowest);
}

TEST_CASE("position audit: Coulomb k indexes the excitation level") {
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  PositionAudit audit = audit_plane_coulomb(s, GaugeParams{1.0, 1.0}, 1);
  REQUIRE(audit.positions.size() == 2);
  CHECK(audit.positions[0] == 1); // ground state of the alpha_0 potential
  CHECK(audit.positions[1] == 2); // first excited state of the alpha_1 potential
  CHECK(audit.all_among_lowest);
}

TEST_CASE("FD node counts agree with polynomial root counts") {
  PlaneSector s(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  GaugeParams g{1.0, 1.0};
  auto sols = qes::solve_plane_coulomb_qes(s, g, 2);
  RadialGrid grid = default_coulomb_grid(g);
  for (const auto &sol : sols) {
    auto veff = plane_coulomb_gauged_potential(s, g, 2, sol.alpha);
    std::vector<double> vals = fd_eigen_radial(veff, grid, sol.index + 1);
    std::vector<double> vec = fd_eigenvector(veff, grid, vals.back());
    CHECK(count_nodes(vec) == static_cast<int>(qes::positive_roots(sol.poly).size()));
  }

  // same agreement for an oscillator sector (roots counted in z = x^2)
  DunklParams mu(1.0);
  GaugeParams gl{0.5, 1.0};
  auto line = qes::solve_line_qes(mu, Parity(0), gl, 2);
  auto veff = line_gauged_potential(mu, Parity(0), gl, 2);
  RadialGrid ogrid = default_oscillator_grid(gl);
  std::vector<double> vals = fd_eigen_radial(veff, ogrid, 3);
  for (const auto &sol : line) {
    std::vector<double> vec = fd_eigenvector(veff, ogrid, vals[static_cast<size_t>(sol.index)]);
    CHECK(count_nodes(vec) == static_cast<int>(qes::positive_roots(sol.poly).size()));
  }
}

TEST_CASE("oracle report bookkeeping") {
  OracleReport report;
  report.append("lowest", 3.0, 3.0000004);
  report.append("first", 7.0, 7.1);
  CHECK(report.entries.size() == 2);
  CHECK(report.entries[0].abs_error == doctest::Approx(4e-7));
  CHECK(report.max_abs_error() == doctest::Approx(0.1));
  CHECK(report.all_within(0.2));
  CHECK_FALSE(report.all_within(1e-3));
}
