#include "dunkl/report.hpp"

#include "dunkl/es.hpp"
#include "dunkl/operators.hpp"

#include "json.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace dunkl::cli {

using ordered_json = nlohmann::ordered_json;

std::vector<qes::QESSolution> solve_for(const RunConfig &config) {
  if (config.family == "line")
    return qes::solve_line_qes(line_params(config), line_parity(config), gauge(config), config.n);
  if (config.family == "plane")
    return qes::solve_plane_oscillator_qes(plane_sector(config), gauge(config), config.n);
  return qes::solve_plane_coulomb_qes(plane_sector(config), gauge(config), config.n);
}

namespace {

std::vector<qes::QESSolution> closed_for(const RunConfig &config) {
  if (config.n > 1) return {};
  if (config.n == 1 && !(config.a > 0.0)) return {};
  if (config.family == "line")
    return qes::closed_form_line(line_params(config), line_parity(config), gauge(config),
                                 config.n);
  if (config.family == "plane")
    return qes::closed_form_plane_oscillator(plane_sector(config), gauge(config), config.n);
  return qes::closed_form_plane_coulomb(plane_sector(config), gauge(config), config.n);
}

ordered_json config_json(const RunConfig &c) {
  ordered_json j;
  j["family"] = c.family;
  if (c.family == "line") {
    j["mu"] = c.mu;
    j["eps"] = c.eps;
  } else {
    j["nu"] = c.nu;
    j["mu1"] = c.mu1;
    j["mu2"] = c.mu2;
    j["eps1"] = c.eps1;
    j["eps2"] = c.eps2;
  }
  j["a"] = c.a;
  j["b"] = c.b;
  j["n"] = c.n;
  j["oracle"] = c.oracle;
  j["rmax"] = c.rmax;
  j["npoints"] = c.npoints;
  j["format"] = c.format;
  j["output"] = c.output;
  return j;
}

ordered_json solution_json(const qes::QESSolution &s, bool coulomb) {
  ordered_json j;
  j["k"] = s.index;
  j["energy"] = s.energy;
  if (coulomb) j["alpha"] = s.alpha;
  j["poly"] = s.poly;
  j["degenerate_degree"] = s.degenerate_degree;
  j["provenance"] = s.provenance == qes::Provenance::block ? "block" : "closed-form";
  return j;
}

double closed_form_delta(const std::vector<qes::QESSolution> &block,
                         const std::vector<qes::QESSolution> &closed) {
  double worst = 0.0;
  for (size_t k = 0; k < block.size() && k < closed.size(); ++k) {
    double scale = std::max({std::fabs(block[k].energy), std::fabs(closed[k].energy), 1.0});
    worst = std::max(worst, std::fabs(block[k].energy - closed[k].energy) / scale);
    if (block[k].family == qes::Family::plane_coulomb) {
      double ascale = std::max({std::fabs(block[k].alpha), std::fabs(closed[k].alpha), 1.0});
      worst = std::max(worst, std::fabs(block[k].alpha - closed[k].alpha) / ascale);
    }
  }
  return worst;
}

int thread_cap() {
  const char *env = std::getenv("DUNKL_QES_THREADS");
  int cap = 0;
  if (env) cap = std::atoi(env);
  if (cap <= 0) cap = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, cap);
}

oracle::RadialGrid grid_for(const RunConfig &config) {
  if (config.rmax > 0.0 && config.npoints >= 200)
    return oracle::RadialGrid(config.rmax, config.npoints);
  if (config.family == "coulomb") return oracle::default_coulomb_grid(gauge(config));
  return oracle::default_oscillator_grid(gauge(config));
}

double tabulate_radius(const RunConfig &config) {
  // Gauge exponent ~= 45 at the edge keeps every wavefunction column below
  // 1e-12 of its peak.
  double a = config.a, b = config.b;
  if (config.family == "coulomb") {
    if (a > 0.0) return (-b + std::sqrt(b * b + 90.0 * a)) / a;
    return 45.0 / b;
  }
  double y = (a > 0.0) ? (-b + std::sqrt(b * b + 180.0 * a)) / a : 90.0 / b;
  return std::sqrt(y);
}

} // namespace

SpectrumResult compute_spectrum(RunConfig config) {
  validate(config);
  SpectrumResult result;
  result.config = config;
  result.solutions = solve_for(config);
  result.closed = closed_for(config);
  return result;
}

std::string spectrum_table(const SpectrumResult &result) {
  const bool coulomb = result.config.family == "coulomb";
  std::ostringstream os;
  os << "family=" << result.config.family;
  if (result.config.family == "line")
    os << " mu=" << result.config.mu << " eps=" << result.config.eps;
  else
    os << " nu=" << result.config.nu << " mu1=" << result.config.mu1
       << " mu2=" << result.config.mu2;
  os << " a=" << result.config.a << " b=" << result.config.b << " n=" << result.config.n << "\n";

  for (const auto &s : result.solutions) {
    os << "k=" << s.index << "  energy=" << format_g17(s.energy);
    if (coulomb) os << "  alpha=" << format_g17(s.alpha);
    os << "  provenance=" << (s.provenance == qes::Provenance::block ? "block" : "closed-form");
    os << "  poly=[";
    for (size_t i = 0; i < s.poly.size(); ++i) os << (i ? ", " : "") << format_g17(s.poly[i]);
    os << "]";
    if (s.degenerate_degree) os << "  degenerate-degree";
    os << "\n";
  }
  if (!result.closed.empty())
    os << "closed-form cross-check: max relative delta = "
       << format_g17(closed_form_delta(result.solutions, result.closed)) << "\n";
  return os.str();
}

std::string spectrum_csv(const SpectrumResult &result) {
  const bool coulomb = result.config.family == "coulomb";
  std::ostringstream os;
  os << "family,n,k,energy,alpha,provenance,degenerate_degree,closed_form_delta";
  for (int i = 0; i <= result.config.n; ++i) os << ",c" << i;
  os << "\n";
  double delta = result.closed.empty()
                     ? std::numeric_limits<double>::quiet_NaN()
                     : closed_form_delta(result.solutions, result.closed);
  for (const auto &s : result.solutions) {
    os << result.config.family << ',' << s.n << ',' << s.index << ',' << format_g17(s.energy)
       << ',' << format_g17(coulomb ? s.alpha : 0.0) << ','
       << (s.provenance == qes::Provenance::block ? "block" : "closed-form") << ','
       << (s.degenerate_degree ? 1 : 0) << ',' << format_g17(delta);
    for (int i = 0; i <= result.config.n; ++i)
      os << ',' << format_g17(i < static_cast<int>(s.poly.size()) ? s.poly[static_cast<size_t>(i)]
                                                                  : 0.0);
    os << "\n";
  }
  return os.str();
}

std::string spectrum_json(const SpectrumResult &result) {
  const bool coulomb = result.config.family == "coulomb";
  ordered_json j;
  j["config"] = config_json(result.config);
  j["results"] = ordered_json::array();
  for (const auto &s : result.solutions) j["results"].push_back(solution_json(s, coulomb));
  if (!result.closed.empty())
    j["closed_form_delta"] = closed_form_delta(result.solutions, result.closed);
  return j.dump(2) + "\n";
}

VerificationReport run_verification(RunConfig config, const std::vector<double> &expected) {
  validate(config);
  VerificationReport report;
  report.config = config;
  report.solutions = solve_for(config);

  const bool coulomb = config.family == "coulomb";
  const double tol_residual = 1e-11;
  const double tol_closed = 1e-11;
  const double tol_identity = 1e-12;
  const double tol_oracle = 1e-5;
  const double tol_orth = 1e-9;

  // Exact eigen-equation residuals through the operator algebra (independent
  // of the block recurrences).
  {
    CheckResult c{"eigen-residual", true, 0.0, tol_residual, ""};
    for (const auto &s : report.solutions) {
      double r = 0.0;
      if (config.family == "line") {
        auto apply = [&](const QuasiPolynomial &psi) {
          return to_laurent(line_hamiltonian_apply(line_params(config), gauge(config), config.n,
                                                   psi, LineHamiltonianForm::direct));
        };
        r = oracle::residual_meter(apply, s.wavefunction, s.energy);
      } else if (config.family == "plane") {
        auto apply = [&](const QuasiPolynomial &psi) {
          return qes::plane_oscillator_apply(plane_sector(config), gauge(config), config.n, psi);
        };
        r = oracle::residual_meter(apply, s.wavefunction, s.energy);
      } else {
        auto apply = [&](const QuasiPolynomial &psi) {
          return qes::plane_coulomb_apply(plane_sector(config), gauge(config), config.n, s.alpha,
                                          psi);
        };
        r = oracle::residual_meter(apply, s.wavefunction, s.energy);
      }
      c.value = std::max(c.value, r);
    }
    c.pass = c.value <= c.tolerance;
    report.checks.push_back(std::move(c));
  }

  // Block route against the explicit n <= 1 closed forms.
  if (config.n <= 1 && (config.n == 0 || config.a > 0.0)) {
    CheckResult c{"closed-form", true, 0.0, tol_closed, ""};
    c.value = closed_form_delta(report.solutions, closed_for(config));
    c.pass = c.value <= c.tolerance;
    report.checks.push_back(std::move(c));
  }

  // The two printed forms of the line Hamiltonian are one operator.
  if (config.family == "line") {
    CheckResult c{"operator-identity", true, 0.0, tol_identity, ""};
    std::mt19937_64 rng(20240811u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<double> coeffs(static_cast<size_t>(1 + (rng() % 13)));
      for (double &x : coeffs) x = unit(rng);
      QuasiPolynomial f{oscillator_gauge(gauge(config)), coeffs};
      QuasiPolynomial d = line_hamiltonian_apply(line_params(config), gauge(config), config.n, f,
                                                 LineHamiltonianForm::direct);
      QuasiPolynomial e = line_hamiltonian_apply(line_params(config), gauge(config), config.n, f,
                                                 LineHamiltonianForm::extended);
      double scale = std::max({d.max_abs_coeff(), e.max_abs_coeff(), 1e-300});
      QuasiPolynomial diff = d - e;
      c.value = std::max(c.value, diff.max_abs_coeff() / scale);
    }
    c.pass = c.value <= c.tolerance;
    report.checks.push_back(std::move(c));
  }

  // Brute-force finite-difference eigensolver against the analytic energies
  // (gauged convention: FD eigenvalue = 2 * physical energy).
  {
    CheckResult c{"oracle-energies", true, 0.0, tol_oracle, ""};
    try {
      oracle::RadialGrid grid = grid_for(config);
      report.oracle_report.rmax = grid.rmax;
      report.oracle_report.npoints = grid.npoints;
      std::ostringstream note;
      note << "rmax=" << format_g17(grid.rmax) << " npoints=" << grid.npoints;
      auto nearest = [](const std::vector<double> &vals, double target) {
        double best = std::numeric_limits<double>::infinity();
        for (double v : vals)
          if (std::fabs(v - target) < std::fabs(best - target)) best = v;
        return best;
      };
      if (coulomb) {
        for (const auto &s : report.solutions) {
          auto rich = oracle::fd_eigen_richardson(
              oracle::plane_coulomb_gauged_potential(plane_sector(config), gauge(config),
                                                     config.n, s.alpha),
              grid, config.n + 2);
          report.oracle_report.append("coulomb k=" + std::to_string(s.index), 2.0 * s.energy,
                                      nearest(rich.extrapolated, 2.0 * s.energy));
        }
      } else {
        auto veff = config.family == "line"
                        ? oracle::line_gauged_potential(line_params(config), line_parity(config),
                                                        gauge(config), config.n)
                        : oracle::plane_oscillator_gauged_potential(plane_sector(config),
                                                                    gauge(config), config.n);
        auto rich = oracle::fd_eigen_richardson(veff, grid, config.n + 3);
        for (const auto &s : report.solutions)
          report.oracle_report.append(config.family + " k=" + std::to_string(s.index),
                                      2.0 * s.energy, nearest(rich.extrapolated, 2.0 * s.energy));
      }
      c.value = report.oracle_report.max_abs_error();
      c.note = note.str();
      c.pass = c.value <= c.tolerance;
    } catch (const std::exception &ex) {
      c.pass = false;
      c.value = std::numeric_limits<double>::quiet_NaN();
      c.note = ex.what();
    }
    report.checks.push_back(std::move(c));
  }

  // Same-Hamiltonian eigenstates must be orthogonal under the weighted
  // measure; the Coulomb levels live in different potentials, their structure
  // is checked through node counts instead.
  if (!coulomb && config.n >= 1) {
    CheckResult c{"orthogonality", true, 0.0, tol_orth, ""};
    oracle::Weight w;
    if (config.family == "line")
      w = oracle::Weight{oracle::Weight::Kind::line, 2.0 * config.mu};
    else
      w = oracle::Weight{oracle::Weight::Kind::radial, 2.0 * config.mu1 + 2.0 * config.mu2 + 1.0};
    try {
      std::vector<double> norms;
      for (const auto &s : report.solutions)
        norms.push_back(oracle::weighted_norm(s.wavefunction, w));
      for (size_t i = 0; i < report.solutions.size(); ++i)
        for (size_t j = i + 1; j < report.solutions.size(); ++j) {
          double ip = oracle::weighted_inner_product(report.solutions[i].wavefunction,
                                                     report.solutions[j].wavefunction, w);
          c.value = std::max(c.value, std::fabs(ip) / (norms[i] * norms[j]));
        }
      c.pass = c.value <= c.tolerance;
    } catch (const std::exception &ex) {
      c.pass = false;
      c.note = ex.what();
    }
    report.checks.push_back(std::move(c));
  }
  if (coulomb) {
    CheckResult c{"node-counts", true, 0.0, 0.0, ""};
    for (const auto &s : report.solutions) {
      int nodes = static_cast<int>(qes::positive_roots(s.poly).size());
      if (nodes != s.index) {
        c.pass = false;
        c.note = "alpha_" + std::to_string(s.index) + " polynomial has " + std::to_string(nodes) +
                 " positive roots";
      }
    }
    report.checks.push_back(std::move(c));
  }

  if (!expected.empty()) {
    CheckResult c{"expected-energies", true, 0.0, 1e-8, ""};
    for (double want : expected) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto &s : report.solutions) best = std::min(best, std::fabs(s.energy - want));
      c.value = std::max(c.value, best);
    }
    c.pass = c.value <= c.tolerance;
    if (!c.pass) c.note = "stated energies do not match the computed spectrum";
    report.checks.push_back(std::move(c));
  }

  report.pass = true;
  for (const auto &c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

std::string verification_json(const VerificationReport &report) {
  const bool coulomb = report.config.family == "coulomb";
  ordered_json j;
  j["config"] = config_json(report.config);
  j["results"] = ordered_json::array();
  for (const auto &s : report.solutions) j["results"].push_back(solution_json(s, coulomb));
  j["checks"] = ordered_json::array();
  ordered_json tolerances;
  for (const auto &c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["value"] = c.value;
    cj["tolerance"] = c.tolerance;
    if (!c.note.empty()) cj["note"] = c.note;
    j["checks"].push_back(cj);
    tolerances[c.name] = c.tolerance;
  }
  if (!report.oracle_report.entries.empty()) {
    ordered_json oj;
    oj["rmax"] = report.oracle_report.rmax;
    oj["npoints"] = report.oracle_report.npoints;
    oj["entries"] = ordered_json::array();
    for (const auto &e : report.oracle_report.entries) {
      ordered_json ej;
      ej["label"] = e.label;
      ej["analytic"] = e.analytic;
      ej["oracle"] = e.oracle;
      ej["abs_error"] = e.abs_error;
      ej["rel_error"] = e.rel_error;
      oj["entries"].push_back(ej);
    }
    j["oracle"] = oj;
  }
  j["tolerances"] = tolerances;
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

std::string scan_csv(RunConfig config, const ScanSpec &spec) {
  validate(config);
  if (spec.param != "a" && spec.param != "b" && spec.param != "mu" && spec.param != "nu" &&
      spec.param != "n")
    throw std::invalid_argument("scan parameter must be one of: a, b, mu, nu, n");
  if (spec.steps < 1) throw std::invalid_argument("scan needs at least 1 step");

  std::vector<double> values;
  if (spec.param == "n") {
    int lo = static_cast<int>(std::lround(spec.from));
    int hi = static_cast<int>(std::lround(spec.to));
    if (hi < lo) std::swap(lo, hi);
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  } else {
    for (int i = 0; i <= spec.steps; ++i)
      values.push_back(spec.from + (spec.to - spec.from) * i / spec.steps);
  }

  // Every configuration must validate before any work is fanned out.
  std::vector<RunConfig> configs;
  for (double v : values) {
    RunConfig c = config;
    if (spec.param == "a") c.a = v;
    else if (spec.param == "b") c.b = v;
    else if (spec.param == "mu") c.mu = v;
    else if (spec.param == "nu") c.nu = v;
    else c.n = static_cast<int>(std::lround(v));
    if (spec.param == "nu") {
      c.eps1 = -1; // re-infer the parity pair for the new lattice point
      c.eps2 = -1;
    }
    validate(c);
    configs.push_back(std::move(c));
  }

  std::vector<std::vector<qes::QESSolution>> rows(configs.size());
  std::atomic<size_t> next{0};
  int nthreads = std::min<int>(thread_cap(), static_cast<int>(configs.size()));
  std::vector<std::thread> workers;
  for (int t = 0; t < nthreads; ++t)
    workers.emplace_back([&]() {
      for (size_t i = next.fetch_add(1); i < configs.size(); i = next.fetch_add(1))
        rows[i] = solve_for(configs[i]);
    });
  for (auto &w : workers) w.join();

  std::ostringstream os;
  os << "param,value,k,energy,alpha\n";
  for (size_t i = 0; i < configs.size(); ++i)
    for (const auto &s : rows[i])
      os << spec.param << ',' << format_g17(values[i]) << ',' << s.index << ','
         << format_g17(s.energy) << ','
         << format_g17(config.family == "coulomb" ? s.alpha : 0.0) << "\n";
  return os.str();
}

std::string tabulate_csv(RunConfig config, const TabulateSpec &spec) {
  validate(config);
  if (spec.samples < 2) throw std::invalid_argument("tabulate needs at least 2 samples");
  double radius = spec.radius > 0.0 ? spec.radius : tabulate_radius(config);
  auto solutions = solve_for(config);

  std::ostringstream os;
  if (config.family == "line") {
    std::vector<double> xs;
    for (int i = -spec.samples; i <= spec.samples; ++i)
      xs.push_back(radius * i / spec.samples);
    auto v0 = qes::line_potential(line_params(config), Parity(0), gauge(config), config.n, xs);
    auto v1 = qes::line_potential(line_params(config), Parity(1), gauge(config), config.n, xs);
    os << "x,V_eps0,V_eps1";
    for (const auto &s : solutions) os << ",psi_" << s.index;
    os << "\n";
    for (size_t i = 0; i < xs.size(); ++i) {
      os << format_g17(xs[i]) << ',' << format_g17(v0[i]) << ',' << format_g17(v1[i]);
      for (const auto &s : solutions) os << ',' << format_g17(s.wavefunction.eval(xs[i]));
      os << "\n";
    }
    return os.str();
  }

  std::vector<double> rho;
  for (int i = 1; i <= spec.samples; ++i) rho.push_back(radius * i / spec.samples);
  if (config.family == "plane") {
    auto v = qes::plane_oscillator_potential(plane_sector(config), gauge(config), config.n, rho);
    os << "rho,V";
    for (const auto &s : solutions) os << ",psi_" << s.index;
    os << "\n";
    for (size_t i = 0; i < rho.size(); ++i) {
      os << format_g17(rho[i]) << ',' << format_g17(v[i]);
      for (const auto &s : solutions) os << ',' << format_g17(s.wavefunction.eval(rho[i]));
      os << "\n";
    }
    return os.str();
  }

  std::vector<std::vector<double>> pots;
  for (const auto &s : solutions)
    pots.push_back(
        qes::plane_coulomb_potential(plane_sector(config), gauge(config), config.n, s.alpha, rho));
  os << "rho";
  for (const auto &s : solutions) os << ",V_" << s.index;
  for (const auto &s : solutions) os << ",psi_" << s.index;
  os << "\n";
  for (size_t i = 0; i < rho.size(); ++i) {
    os << format_g17(rho[i]);
    for (const auto &p : pots) os << ',' << format_g17(p[i]);
    for (const auto &s : solutions) os << ',' << format_g17(s.wavefunction.eval(rho[i]));
    os << "\n";
  }
  return os.str();
}

} // namespace dunkl::cli
