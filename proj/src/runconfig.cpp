#include "dunkl/runconfig.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dunkl::cli {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate(RunConfig &config) {
  if (config.family != "line" && config.family != "plane" && config.family != "coulomb")
    throw std::invalid_argument("family must be one of: line, plane, coulomb");
  if (config.n < 0) throw std::invalid_argument("n must be a non-negative integer");
  if (config.a < 0.0) throw std::invalid_argument("a must be >= 0");
  if (config.a == 0.0 && !(config.b > 0.0))
    throw std::invalid_argument("b must be > 0 when a = 0");

  if (config.family == "line") {
    if (!(config.mu > -0.5)) throw std::invalid_argument("mu must be > -1/2");
    if (config.eps != 0 && config.eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  } else {
    if (!(config.mu1 > -0.5)) throw std::invalid_argument("mu1 must be > -1/2");
    if (!(config.mu2 > -0.5)) throw std::invalid_argument("mu2 must be > -1/2");
    double doubled = 2.0 * config.nu;
    if (std::fabs(doubled - std::round(doubled)) > 1e-9)
      throw std::invalid_argument("nu must be an integer or half-odd integer");
    long two_nu = static_cast<long>(std::round(doubled));
    if (two_nu < 0) throw std::invalid_argument("nu must be >= 0");
    if (config.eps1 == -1 || config.eps2 == -1) {
      // Infer an admissible parity pair from the nu lattice.
      if (two_nu % 2 == 1) {
        config.eps1 = 0;
        config.eps2 = 1;
      } else {
        config.eps1 = 0;
        config.eps2 = 0;
      }
    }
    // Full sector validation (lattice vs parities, M^2 >= 0).
    PlaneSector sector(Parity(config.eps1), Parity(config.eps2), config.nu, config.mu1,
                       config.mu2);
    if (config.family == "coulomb" && !(sector.effective_l().l > -1.0))
      throw std::invalid_argument(
          "invalid sector: 2 nu + mu1 + mu2 must exceed -1/2 for the coulomb family");
  }

  if (config.rmax < 0.0) throw std::invalid_argument("rmax must be >= 0 (0 selects automatic)");
  if (config.npoints != 0 && config.npoints < 200)
    throw std::invalid_argument("npoints must be 0 (automatic) or >= 200");
  if (config.format != "csv" && config.format != "json")
    throw std::invalid_argument("format must be csv or json");
}

DunklParams line_params(const RunConfig &config) { return DunklParams(config.mu); }
Parity line_parity(const RunConfig &config) { return Parity(config.eps); }
PlaneSector plane_sector(const RunConfig &config) {
  return PlaneSector(Parity(config.eps1), Parity(config.eps2), config.nu, config.mu1, config.mu2);
}
GaugeParams gauge(const RunConfig &config) { return GaugeParams{config.a, config.b}; }

namespace {

bool parse_bool(const std::string &v, const std::string &key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("config key " + key + " expects true/false");
}

} // namespace

RunConfig parse_config_file(std::istream &in) {
  RunConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto strip = [](std::string s) {
      size_t b2 = s.find_first_not_of(" \t");
      if (b2 == std::string::npos) return std::string();
      size_t e2 = s.find_last_not_of(" \t");
      return s.substr(b2, e2 - b2 + 1);
    };
    key = strip(key);
    val = strip(val);

    try {
      if (key == "family") config.family = val;
      else if (key == "mu") config.mu = std::stod(val);
      else if (key == "eps") config.eps = std::stoi(val);
      else if (key == "nu") config.nu = std::stod(val);
      else if (key == "mu1") config.mu1 = std::stod(val);
      else if (key == "mu2") config.mu2 = std::stod(val);
      else if (key == "eps1") config.eps1 = std::stoi(val);
      else if (key == "eps2") config.eps2 = std::stoi(val);
      else if (key == "a") config.a = std::stod(val);
      else if (key == "b") config.b = std::stod(val);
      else if (key == "n") config.n = std::stoi(val);
      else if (key == "oracle") config.oracle = parse_bool(val, key);
      else if (key == "rmax") config.rmax = std::stod(val);
      else if (key == "npoints") config.npoints = std::stoi(val);
      else if (key == "format") config.format = val;
      else if (key == "output") config.output = val;
      else throw std::invalid_argument("unknown config key: " + key);
    } catch (const std::invalid_argument &) {
      throw;
    } catch (const std::exception &) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": cannot parse value for " + key);
    }
  }
  return config;
}

RunConfig load_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  return parse_config_file(in);
}

void write_config_file(std::ostream &out, const RunConfig &config) {
  out << "family=" << config.family << '\n';
  out << "mu=" << format_g17(config.mu) << '\n';
  out << "eps=" << config.eps << '\n';
  out << "nu=" << format_g17(config.nu) << '\n';
  out << "mu1=" << format_g17(config.mu1) << '\n';
  out << "mu2=" << format_g17(config.mu2) << '\n';
  out << "eps1=" << config.eps1 << '\n';
  out << "eps2=" << config.eps2 << '\n';
  out << "a=" << format_g17(config.a) << '\n';
  out << "b=" << format_g17(config.b) << '\n';
  out << "n=" << config.n << '\n';
  out << "oracle=" << (config.oracle ? "true" : "false") << '\n';
  out << "rmax=" << format_g17(config.rmax) << '\n';
  out << "npoints=" << config.npoints << '\n';
  out << "format=" << config.format << '\n';
  out << "output=" << config.output << '\n';
}

} // namespace dunkl::cli
