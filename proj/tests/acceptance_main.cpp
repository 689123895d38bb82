// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one pass/fail line per criterion.  Exit code = number of failures.

#include "dunkl/es.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/qes.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace dunkl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Rng {
public:
  explicit Rng(unsigned long long seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

private:
  std::mt19937_64 gen_;
};

PlaneSector random_sector(Rng &rng) {
  // nu lattice with parities; mu range keeps M^2 >= 0 and l > -1 throughout.
  int two_nu = rng.uniform_int(0, 4);
  Parity e1(0), e2(two_nu % 2 ? 1 : 0);
  return PlaneSector(e1, e2, 0.5 * two_nu, rng.uniform(-0.2, 1.8), rng.uniform(-0.2, 1.8));
}

double rel_diff(double x, double y) {
  return std::fabs(x - y) / std::max({std::fabs(x), std::fabs(y), 1.0});
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. n=0/1 closed-form reproduction across 200 random draws per family.
Outcome criterion_closed_forms() {
  Rng rng(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.uniform_int(0, 1);
    GaugeParams g{rng.uniform(0.05, 2.0), rng.uniform(-1.5, 2.0)};

    DunklParams mu(rng.uniform(-0.4, 2.0));
    Parity eps(rng.uniform_int(0, 1));
    auto line_block = qes::solve_line_qes(mu, eps, g, n);
    auto line_closed = qes::closed_form_line(mu, eps, g, n);
    for (size_t k = 0; k < line_block.size(); ++k)
      worst = std::max(worst, rel_diff(line_block[k].energy, line_closed[k].energy));

    PlaneSector sector = random_sector(rng);
    auto posc_block = qes::solve_plane_oscillator_qes(sector, g, n);
    auto posc_closed = qes::closed_form_plane_oscillator(sector, g, n);
    for (size_t k = 0; k < posc_block.size(); ++k)
      worst = std::max(worst, rel_diff(posc_block[k].energy, posc_closed[k].energy));

    auto pc_block = qes::solve_plane_coulomb_qes(sector, g, n);
    auto pc_closed = qes::closed_form_plane_coulomb(sector, g, n);
    for (size_t k = 0; k < pc_block.size(); ++k) {
      worst = std::max(worst, rel_diff(pc_block[k].energy, pc_closed[k].energy));
      worst = std::max(worst, rel_diff(pc_block[k].alpha, pc_closed[k].alpha));
    }
  }
  return {worst <= 1e-11, "max relative deviation " + fmt(worst)};
}

// 2. The two printed forms of the line Hamiltonian agree coefficient-wise.
Outcome criterion_operator_identity() {
  Rng rng(1002);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    double a = rng.uniform(1e-6, 2.0);
    double b = rng.uniform(-1.0, 1.0);
    DunklParams mu(rng.uniform(-0.4, 2.0));
    GaugeParams g{a, b};
    int n = rng.uniform_int(0, 6);
    std::vector<double> coeffs(static_cast<size_t>(rng.uniform_int(0, 12)) + 1);
    for (double &c : coeffs) c = rng.uniform(-1.0, 1.0);
    QuasiPolynomial f{oscillator_gauge(g), coeffs};
    QuasiPolynomial hd = line_hamiltonian_apply(mu, g, n, f, LineHamiltonianForm::direct);
    QuasiPolynomial he = line_hamiltonian_apply(mu, g, n, f, LineHamiltonianForm::extended);
    QuasiPolynomial diff = hd - he;
    double scale = std::max({hd.max_abs_coeff(), he.max_abs_coeff(), 1e-300});
    worst = std::max(worst, diff.max_abs_coeff() / scale);
  }
  return {worst <= 1e-12, "max relative coefficient difference " + fmt(worst)};
}

// 3. Exact eigen-equation residuals for all solutions with n <= 6.
Outcome criterion_residuals() {
  Rng rng(1003);
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    GaugeParams g{rng.uniform(0.2, 1.6), rng.uniform(-1.2, 1.6)};

    DunklParams mu(rng.uniform(-0.4, 2.0));
    Parity eps(rng.uniform_int(0, 1));
    for (const auto &s : qes::solve_line_qes(mu, eps, g, n)) {
      auto apply = [&](const QuasiPolynomial &psi) {
        return to_laurent(line_hamiltonian_apply(mu, g, n, psi, LineHamiltonianForm::direct));
      };
      worst = std::max(worst, oracle::residual_meter(apply, s.wavefunction, s.energy));
    }

    PlaneSector sector = random_sector(rng);
    for (const auto &s : qes::solve_plane_oscillator_qes(sector, g, n)) {
      auto apply = [&](const QuasiPolynomial &psi) {
        return qes::plane_oscillator_apply(sector, g, n, psi);
      };
      worst = std::max(worst, oracle::residual_meter(apply, s.wavefunction, s.energy));
    }
    for (const auto &s : qes::solve_plane_coulomb_qes(sector, g, n)) {
      auto apply = [&](const QuasiPolynomial &psi) {
        return qes::plane_coulomb_apply(sector, g, n, s.alpha, psi);
      };
      worst = std::max(worst, oracle::residual_meter(apply, s.wavefunction, s.energy));
    }
  }
  return {worst <= 1e-11, "max residual " + fmt(worst)};
}

// 4. Independent finite-difference oracle: energies, convergence order, the
//    fixed Coulomb energy, and the ground/first-excited Coulomb positioning.
Outcome criterion_fd_oracle() {
  double worst = 0.0;
  double worst_order = 2.0;
  std::string note;

  DunklParams mu(1.0);
  GaugeParams gl{0.5, 1.0};
  for (int n = 0; n <= 2; ++n) {
    auto veff = oracle::line_gauged_potential(mu, Parity(0), gl, n);
    auto rich = oracle::fd_eigen_richardson(veff, oracle::default_oscillator_grid(gl), n + 1);
    auto sols = qes::solve_line_qes(mu, Parity(0), gl, n);
    for (int k = 0; k <= n; ++k)
      worst = std::max(worst, std::fabs(rich.extrapolated[static_cast<size_t>(k)] -
                                        2.0 * sols[static_cast<size_t>(k)].energy));
  }

  PlaneSector sector(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  GaugeParams gp{0.5, 1.0};
  for (int n = 0; n <= 2; ++n) {
    auto veff = oracle::plane_oscillator_gauged_potential(sector, gp, n);
    auto rich = oracle::fd_eigen_richardson(veff, oracle::default_oscillator_grid(gp), n + 1);
    auto sols = qes::solve_plane_oscillator_qes(sector, gp, n);
    for (int k = 0; k <= n; ++k)
      worst = std::max(worst, std::fabs(rich.extrapolated[static_cast<size_t>(k)] -
                                        2.0 * sols[static_cast<size_t>(k)].energy));
  }

  GaugeParams gc{1.0, 1.0};
  for (int n = 0; n <= 2; ++n) {
    auto sols = qes::solve_plane_coulomb_qes(sector, gc, n);
    // every potential of the set carries the shared fixed energy
    double gauged = 2.0 * sols[0].energy; // = a(2n+2l+3) - b^2
    for (const auto &s : sols) {
      auto veff = oracle::plane_coulomb_gauged_potential(sector, gc, n, s.alpha);
      auto rich =
          oracle::fd_eigen_richardson(veff, oracle::default_coulomb_grid(gc), s.index + 1);
      worst = std::max(worst,
                       std::fabs(rich.extrapolated[static_cast<size_t>(s.index)] - gauged));
    }
  }

  // measured convergence order on one representative case per family
  worst_order = 2.0;
  auto track = [&worst_order](double order) {
    if (std::fabs(order - 2.0) > std::fabs(worst_order - 2.0)) worst_order = order;
  };
  track(oracle::fd_convergence_order(oracle::line_gauged_potential(mu, Parity(0), gl, 1),
                                     oracle::RadialGrid(6.0, 700), 0));
  track(oracle::fd_convergence_order(oracle::plane_oscillator_gauged_potential(sector, gp, 1),
                                     oracle::RadialGrid(6.0, 700), 0));
  track(oracle::fd_convergence_order(
      oracle::plane_coulomb_gauged_potential(sector, gc, 1,
                                             qes::solve_plane_coulomb_qes(sector, gc, 1)[0].alpha),
      oracle::RadialGrid(12.0, 900), 0));

  // Coulomb positioning: k = 0 hosts the ground state, k = 1 the first excited
  oracle::PositionAudit audit = oracle::audit_plane_coulomb(sector, gc, 1);
  bool positions_ok = audit.positions.size() == 2 && audit.positions[0] == 1 &&
                      audit.positions[1] == 2;

  bool pass = worst <= 1e-5 && worst_order > 1.8 && worst_order < 2.2 && positions_ok;
  note = "max |analytic-fd| " + fmt(worst) + ", order " + fmt(worst_order) +
         ", coulomb positions " + (positions_ok ? "ground/first-excited" : "WRONG");
  return {pass, note};
}

// 5. a = 0 limits reproduce the exactly solvable spectra; ES Coulomb energies
//    confirmed by the oracle.
Outcome criterion_es_limits() {
  double worst_rel = 0.0;
  GaugeParams g{0.0, 1.0};
  for (double mu : {0.3, 1.0, 1.7}) {
    for (int eps : {0, 1}) {
      auto sols = qes::solve_line_qes(DunklParams(mu), Parity(eps), g, 4);
      for (int k = 0; k <= 4; ++k)
        worst_rel = std::max(worst_rel, rel_diff(sols[static_cast<size_t>(k)].energy,
                                                 2.0 * k + eps + mu + 0.5));
    }
  }
  PlaneSector sector(Parity(0), Parity(1), 1.5, 0.4, 0.15);
  auto plane = qes::solve_plane_oscillator_qes(sector, g, 4);
  for (int k = 0; k <= 4; ++k)
    worst_rel = std::max(worst_rel, rel_diff(plane[static_cast<size_t>(k)].energy,
                                             2.0 * k + 2.0 * 1.5 + 0.4 + 0.15 + 1.0));

  PlaneSector cs(Parity(0), Parity(1), 0.5, 0.25, 0.25);
  double worst_abs = 0.0;
  for (int k = 0; k <= 1; ++k) {
    es::ESLevel lvl = es::es_plane_coulomb_level(cs, k, 2.0);
    auto rich = oracle::fd_eigen_richardson(oracle::es_coulomb_gauged_potential(cs, 2.0),
                                            oracle::default_es_coulomb_grid(lvl.beta), k + 1);
    worst_abs = std::max(worst_abs,
                         std::fabs(rich.extrapolated[static_cast<size_t>(k)] - 2.0 * lvl.energy));
  }
  bool pass = worst_rel <= 1e-12 && worst_abs <= 1e-5;
  return {pass, "max ES-limit relative " + fmt(worst_rel) + ", coulomb |delta| " +
                    fmt(worst_abs)};
}

// 6. Structural properties of the Coulomb sets and block spectra.
Outcome criterion_structure() {
  Rng rng(1006);
  std::string note = "alpha strictly ascending with node(alpha_k) = k";
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(0, 6);
    GaugeParams g{rng.uniform(0.1, 2.0), rng.uniform(-1.2, 1.8)};
    PlaneSector sector = random_sector(rng);
    auto sols = qes::solve_plane_coulomb_qes(sector, g, n);
    for (int k = 0; k < n; ++k) {
      double gap = sols[static_cast<size_t>(k + 1)].alpha - sols[static_cast<size_t>(k)].alpha;
      if (!(gap > 1e-10 * std::max(1.0, std::fabs(sols[static_cast<size_t>(k)].alpha))))
        return {false, "alpha ordering violated (n=" + std::to_string(n) + ")"};
    }
    for (int k = 0; k <= n; ++k)
      if (static_cast<int>(qes::positive_roots(sols[static_cast<size_t>(k)].poly).size()) != k)
        return {false, "node count of alpha_" + std::to_string(k) + " is not " +
                           std::to_string(k)};

    // oscillator spectra: symmetrizable, real, simple
    auto osc = qes::solve_line_qes(DunklParams(rng.uniform(-0.4, 2.0)),
                                   Parity(rng.uniform_int(0, 1)), g, n);
    for (int k = 0; k < n; ++k)
      if (!(osc[static_cast<size_t>(k + 1)].energy - osc[static_cast<size_t>(k)].energy >
            1e-10 * std::max(1.0, std::fabs(osc[static_cast<size_t>(k)].energy))))
        return {false, "oscillator spectrum not simple (n=" + std::to_string(n) + ")"};
  }
  return {true, note};
}

// 7. Same-Hamiltonian QES eigenstates are orthogonal under the weighted measure.
Outcome criterion_orthogonality() {
  Rng rng(1007);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    int n = rng.uniform_int(1, 4);
    GaugeParams g{rng.uniform(0.3, 1.5), rng.uniform(-0.8, 1.5)};

    DunklParams mu(rng.uniform(-0.3, 1.8));
    Parity eps(rng.uniform_int(0, 1));
    oracle::Weight wline{oracle::Weight::Kind::line, 2.0 * mu.mu};
    auto line = qes::solve_line_qes(mu, eps, g, n);
    std::vector<double> norms;
    for (const auto &s : line) norms.push_back(oracle::weighted_norm(s.wavefunction, wline));
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j)
        worst = std::max(worst, std::fabs(oracle::weighted_inner_product(
                                    line[i].wavefunction, line[j].wavefunction, wline)) /
                                    (norms[i] * norms[j]));

    PlaneSector sector = random_sector(rng);
    oracle::Weight wrad{oracle::Weight::Kind::radial, sector.drift_weight()};
    auto plane = qes::solve_plane_oscillator_qes(sector, g, n);
    norms.clear();
    for (const auto &s : plane) norms.push_back(oracle::weighted_norm(s.wavefunction, wrad));
    for (size_t i = 0; i < plane.size(); ++i)
      for (size_t j = i + 1; j < plane.size(); ++j)
        worst = std::max(worst, std::fabs(oracle::weighted_inner_product(
                                    plane[i].wavefunction, plane[j].wavefunction, wrad)) /
                                    (norms[i] * norms[j]));
  }
  return {worst <= 1e-9, "max normalized inner product " + fmt(worst)};
}

struct Criterion {
  const char *name;
  Outcome (*run)();
  double budget_seconds;
};

} // namespace

int main() {
  const Criterion criteria[] = {
      {"closed-form reproduction (n=0,1; 200 draws/family; rel 1e-11)", criterion_closed_forms,
       1.0},
      {"operator identity (100 random functions; rel 1e-12)", criterion_operator_identity, 1.0},
      {"exact eigen-residuals (n<=6, all families; 1e-11)", criterion_residuals, 1.0},
      {"independent FD oracle (1e-5 abs; order 2+-0.2; coulomb positions)", criterion_fd_oracle,
       30.0},
      {"ES limits (a=0 exact; ES coulomb vs oracle 1e-5)", criterion_es_limits, 5.0},
      {"structural properties (alpha order, nodes, simple spectra)", criterion_structure, 2.0},
      {"orthogonality (weighted measure, 1e-9 of scale)", criterion_orthogonality, 5.0},
  };

  int failures = 0;
  int index = 0;
  for (const auto &c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception &e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = seconds <= c.budget_seconds;
    bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::string budget_note = in_budget ? "" : ", over budget " + std::to_string(c.budget_seconds);
    std::printf("criterion %d: %s  [%s]  %s (%.2f s%s)\n", index, pass ? "PASS" : "FAIL", c.name,
                out.detail.c_str(), seconds, budget_note.c_str());
  }
  std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
  return failures;
}
