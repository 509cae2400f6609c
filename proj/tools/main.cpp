// se2sr command-line front end: emits geodesic traces, Maxwell verdicts,
// cut-time tables and the root/tt figure datasets as CSV or JSON.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "se2sr/kernels.hpp"
#include "se2sr/maxwell.hpp"
#include "se2sr/ode_oracle.hpp"
#include "se2sr/symmetry.hpp"

using json = nlohmann::json;
using namespace se2sr;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_residual = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_io = 3;
constexpr int exit_root_failure = 4;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// null-with-flag convention for non-finite values
json json_value(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

struct options {
  std::optional<double> gamma;
  std::optional<double> c;
  std::optional<double> energy;
  double frac = 0.25;
  double time = 1.0;
  int samples = 100;
  std::string format = "csv";
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 12345;
  std::string grid;
};

covector covector_from_energy(double e, double frac) {
  if (!(e >= -1.0)) {
    throw std::invalid_argument("energy must be >= -1");
  }
  if (e <= -1.0 + 1e-10) {
    return {0.0, 0.0};
  }
  if (std::abs(e - 1.0) <= 1e-10) {
    const double f = std::clamp(frac, 1e-9, 1.0 - 1e-9);
    return from_elliptic(
        {stratum_id::c3, std::atanh(2.0 * f - 1.0), modulus(1.0), +1, +1});
  }
  if (e < 1.0) {
    const modulus k(std::sqrt(0.5 * (e + 1.0)));
    const double phi = frac * 4.0 * complete_k(k);
    return from_elliptic({stratum_id::c1, phi, k, +1, +1});
  }
  const modulus k(std::sqrt(2.0 / (e + 1.0)));
  const double psi = frac * 4.0 * complete_k(k);
  return from_elliptic({stratum_id::c2, k.k() * psi, k, +1, +1});
}

covector resolve_lambda(const options& o) {
  if (o.gamma && o.c) {
    return {*o.gamma, *o.c};
  }
  if (o.energy) {
    return covector_from_energy(*o.energy, o.frac);
  }
  throw std::invalid_argument(
      "covector required: pass --gamma with --c, or --energy [--frac]");
}

struct grid_spec {
  double lo;
  double hi;
  int n;
};

grid_spec parse_grid(const std::string& s, const grid_spec& fallback) {
  if (s.empty()) return fallback;
  grid_spec g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.n) != 3 ||
      !(g.lo < g.hi) || g.n < 2) {
    throw std::invalid_argument("bad --grid, expected LO:HI:N with LO < HI");
  }
  return g;
}

const char* stratum_name(stratum_id id) {
  switch (id) {
    case stratum_id::c1: return "C1";
    case stratum_id::c2: return "C2";
    case stratum_id::c3: return "C3";
    case stratum_id::c4: return "C4";
    default: return "C5";
  }
}

json config_echo(const options& o) {
  json cfg;
  if (o.gamma) cfg["gamma"] = *o.gamma;
  if (o.c) cfg["c"] = *o.c;
  if (o.energy) cfg["energy"] = *o.energy;
  cfg["frac"] = o.frac;
  cfg["time"] = o.time;
  cfg["samples"] = o.samples;
  cfg["format"] = o.format;
  cfg["out"] = o.out.empty() ? "-" : o.out;
  cfg["tol"] = o.tol;
  cfg["seed"] = o.seed;
  if (!o.grid.empty()) cfg["grid"] = o.grid;
  return cfg;
}

// rows as (header, cells); one emitter per format
class table_writer {
 public:
  table_writer(std::string command, const options& o,
               std::vector<std::string> header)
      : command_(std::move(command)), header_(std::move(header)),
        json_mode_(o.format == "json"), cfg_(config_echo(o)) {}

  void add_row(const std::vector<json>& cells) { rows_.push_back(cells); }

  int write(const std::string& path) const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) {
        std::cerr << "se2sr: cannot open output file " << path << "\n";
        return exit_io;
      }
      os = &file;
    }
    if (json_mode_) {
      json doc;
      doc["meta"] = {{"command", command_}, {"config", cfg_}};
      doc["rows"] = json::array();
      for (const auto& row : rows_) {
        json r;
        for (std::size_t i = 0; i < header_.size(); ++i) r[header_[i]] = row[i];
        doc["rows"].push_back(std::move(r));
      }
      *os << doc.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < header_.size(); ++i) {
        *os << header_[i] << (i + 1 < header_.size() ? "," : "\n");
      }
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          const json& cell = row[i];
          if (cell.is_number_float()) {
            *os << fmt17(cell.get<double>());
          } else if (cell.is_null()) {
            *os << "inf";
          } else if (cell.is_boolean()) {
            *os << (cell.get<bool>() ? 1 : 0);
          } else if (cell.is_string()) {
            *os << cell.get<std::string>();
          } else {
            *os << cell.dump();
          }
          *os << (i + 1 < row.size() ? "," : "\n");
        }
      }
    }
    os->flush();
    if (!*os) {
      std::cerr << "se2sr: write failure\n";
      return exit_io;
    }
    return exit_ok;
  }

 private:
  std::string command_;
  std::vector<std::string> header_;
  bool json_mode_;
  json cfg_;
  std::vector<std::vector<json>> rows_;
};

int cmd_geodesic(const options& o) {
  const covector l = resolve_lambda(o);
  if (!(o.time > 0.0)) throw std::invalid_argument("--time must be > 0");
  if (o.samples < 2) throw std::invalid_argument("--samples must be >= 2");
  const auto tr = kernels::trace_samples({l, o.time}, o.samples,
                                         kernels::exec::parallel);
  table_writer w("geodesic", o,
                 {"s", "x", "y", "theta", "gamma", "c", "curvature", "cusp"});
  for (const auto& s : tr) {
    w.add_row({s.s, s.q.x, s.q.y, s.q.theta, s.gamma, s.c,
               std::isfinite(s.curvature) ? json(s.curvature) : json(nullptr),
               s.cusp});
  }
  return w.write(o.out);
}

int cmd_cut_time(const options& o) {
  const covector l = resolve_lambda(o);
  const stratum st = classify(l);
  const double tt = cut_time_bound(l);
  table_writer w("cut-time", o, {"stratum", "tt", "infinite"});
  w.add_row({stratum_name(st.id), json_value(tt), !std::isfinite(tt)});
  return w.write(o.out);
}

int cmd_maxwell(options o) {
  const covector l = resolve_lambda(o);
  if (!(o.time > 0.0)) throw std::invalid_argument("--time must be > 0");
  const maxwell_verdict v = maxwell_membership({l, o.time}, o.tol);
  o.format = "json";  // the verdict is a structured record
  table_writer w("maxwell", o,
                 {"in_max1", "in_max2", "in_max5", "in_max6", "boundary", "p",
                  "tau", "root_index"});
  w.add_row({v.in_max1, v.in_max2, v.in_max5, v.in_max6, v.boundary, v.p,
             v.tau, v.root_index ? json(*v.root_index) : json(nullptr)});
  return w.write(o.out);
}

int cmd_roots(const options& o) {
  const grid_spec g = parse_grid(o.grid, {0.005, 0.995, 50});
  if (!(g.lo >= 0.0) || !(g.hi < 1.0)) {
    throw std::invalid_argument("roots grid must satisfy 0 <= LO < HI < 1");
  }
  std::vector<double> ks(g.n);
  for (int j = 0; j < g.n; ++j) {
    ks[j] = g.lo + (g.hi - g.lo) * j / (g.n - 1.0);
  }
  std::vector<double> p11;
  try {
    p11 = kernels::p11_grid(ks, kernels::exec::parallel);
  } catch (const std::runtime_error& e) {
    std::cerr << "se2sr: root search failed: " << e.what() << "\n";
    return exit_root_failure;
  }
  table_writer w("roots", o, {"k", "K", "p11", "twoK"});
  for (int j = 0; j < g.n; ++j) {
    const double big_k = complete_k(modulus(ks[j]));
    w.add_row({ks[j], big_k, p11[j], 2.0 * big_k});
  }
  return w.write(o.out);
}

// log-spaced energies accumulating toward the singular level E = 1 from
// both sides; E = 1 itself appears as an explicit infinite marker row
std::vector<double> tt_energy_grid(const grid_spec& g) {
  constexpr double d_min = 1e-6;
  std::vector<double> es;
  const double lo = std::max(g.lo, -1.0);
  if (g.lo <= -1.0) es.push_back(-1.0);
  const bool left = lo < 1.0 - d_min;
  const bool right = g.hi > 1.0 + d_min;
  const int budget = std::max(2, g.n - static_cast<int>(es.size()));
  const int n_left = left ? (right ? budget / 2 : budget) : 0;
  const int n_right = right ? budget - n_left : 0;
  if (left) {
    const double d_max = 1.0 - lo;
    const double d_lo = std::min(d_min, d_max * 0.5);
    for (int j = 0; j < n_left; ++j) {
      const double d =
          d_max * std::pow(d_lo / d_max, j / std::max(1.0, n_left - 1.0));
      es.push_back(1.0 - d);
    }
  }
  if (right) {
    const double d_max = g.hi - 1.0;
    const double d_lo = std::min(d_min, d_max * 0.5);
    for (int j = 0; j < n_right; ++j) {
      const double d =
          d_max * std::pow(d_lo / d_max,
                           (n_right - 1.0 - j) / std::max(1.0, n_right - 1.0));
      es.push_back(1.0 + d);
    }
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

int cmd_tt_curve(const options& o) {
  const grid_spec g = parse_grid(o.grid, {-1.0, 100.0, 120});
  if (!(g.lo >= -1.0)) {
    throw std::invalid_argument("tt-curve grid needs LO >= -1");
  }
  const std::vector<double> es = tt_energy_grid(g);
  const std::vector<double> tts =
      kernels::tt_curve(es, kernels::exec::parallel);
  table_writer w("tt-curve", o, {"energy", "tt", "infinite"});
  bool marker_emitted = false;
  for (std::size_t j = 0; j < es.size(); ++j) {
    if (!marker_emitted && g.lo < 1.0 && g.hi > 1.0 && es[j] > 1.0) {
      w.add_row({1.0, nullptr, true});
      marker_emitted = true;
    }
    w.add_row({es[j], json_value(tts[j]), !std::isfinite(tts[j])});
  }
  return w.write(o.out);
}

covector sample_covector(int which, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ug(0.0, four_pi);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    const double g = ug(rng);
    switch (which) {
      case 1:
      case 2: {
        const double e = which == 1 ? -0.999 + 1.99 * u01(rng)
                                    : 1.001 + 8.0 * u01(rng);
        const double c2 = 2.0 * (e + std::cos(g));
        if (c2 <= 1e-6) continue;
        const covector l{g, (u01(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(c2)};
        const double ee = energy(l);
        if (std::abs(ee - 1.0) < 1e-4 || ee <= -1.0 + 1e-6) continue;
        if (which == 1 && ee >= 1.0) continue;
        if (which == 2 && ee <= 1.0) continue;
        return l;
      }
      case 3: {
        const double ch = std::cos(0.5 * g);
        if (std::abs(ch) < 1e-3) continue;
        return {g, (u01(rng) < 0.5 ? -1.0 : 1.0) * 2.0 * std::abs(ch)};
      }
      case 4:
        return {u01(rng) < 0.5 ? 0.0 : two_pi, 0.0};
      default:
        return {u01(rng) < 0.5 ? pi_v : 3.0 * pi_v, 0.0};
    }
  }
}

int cmd_symmetry_check(const options& o) {
  if (o.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> ut(0.05, 10.0);
  double worst = 0.0;
  for (int rep = 0; rep < o.samples; ++rep) {
    const extended_covector nu{sample_covector(1 + rep % 5, rng), ut(rng)};
    for (int i = 1; i <= 7; ++i) {
      const pose lhs = reflect_pose(i, exp_map(nu));
      const pose rhs = exp_map(reflect_covector(i, nu));
      worst = std::max(worst, pose_distance(lhs, rhs));
    }
  }
  table_writer w("symmetry-check", o,
                 {"samples", "reflections", "max_residual", "tol"});
  w.add_row({o.samples, 7, worst, o.tol});
  const int rc = w.write(o.out);
  if (rc != exit_ok) return rc;
  return worst < o.tol ? exit_ok : exit_residual;
}

int cmd_oracle_diff(const options& o) {
  const covector l = resolve_lambda(o);
  if (!(o.time > 0.0)) throw std::invalid_argument("--time must be > 0");
  const long steps =
      std::max<long>(1000, static_cast<long>(std::ceil(1e5 * o.time)));
  const full_state fs = integrate(l, o.time, steps);
  const pose q = exp_map({l, o.time});
  const double dx = std::abs(q.x - fs.x);
  const double dy = std::abs(q.y - fs.y);
  const double dth = std::abs(std::remainder(q.theta - fs.theta, two_pi));
  table_writer w("oracle-diff", o, {"dx", "dy", "dtheta", "max", "steps"});
  w.add_row({dx, dy, dth, std::max({dx, dy, dth}),
             static_cast<double>(steps)});
  return w.write(o.out);
}

void add_lambda_flags(CLI::App* cmd, options& o) {
  cmd->add_option("--gamma", o.gamma, "pendulum angle gamma of the covector");
  cmd->add_option("--c", o.c, "pendulum velocity c of the covector");
  cmd->add_option("--energy", o.energy,
                  "pendulum energy; replaces --gamma/--c");
  cmd->add_option("--frac", o.frac,
                  "position on the energy level curve, in [0, 1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form sub-Riemannian geodesics on SE(2)"};
  app.require_subcommand(1);
  options o;

  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "sample a geodesic trace (s, pose, phase, curvature)");
  add_lambda_flags(geodesic, o);
  geodesic->add_option("--time", o.time, "duration t > 0");
  geodesic->add_option("--samples", o.samples, "number of samples, >= 2");

  CLI::App* cut_time = app.add_subcommand(
      "cut-time", "stratum and cut-time upper bound of a covector");
  add_lambda_flags(cut_time, o);

  CLI::App* maxwell = app.add_subcommand(
      "maxwell", "Maxwell-stratum membership verdict at (lambda, t)");
  add_lambda_flags(maxwell, o);
  maxwell->add_option("--time", o.time, "duration t > 0");

  CLI::App* roots = app.add_subcommand(
      "roots", "table k, K(k), p11(k), 2K(k) over a k-grid");

  CLI::App* tt_curve = app.add_subcommand(
      "tt-curve", "cut-time bound as a function of energy");

  CLI::App* symmetry = app.add_subcommand(
      "symmetry-check",
      "max commutation residual of the reflection symmetries");
  symmetry->add_option("--samples", o.samples, "random covector-time pairs");

  CLI::App* oracle = app.add_subcommand(
      "oracle-diff", "componentwise gap between closed form and RK4");
  add_lambda_flags(oracle, o);
  oracle->add_option("--time", o.time, "duration t > 0");

  for (CLI::App* cmd :
       {geodesic, cut_time, maxwell, roots, tt_curve, symmetry, oracle}) {
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--tol", o.tol, "tolerance for equality tests");
    cmd->add_option("--seed", o.seed, "RNG seed for sampling commands");
    cmd->add_option("--grid", o.grid, "grid as LO:HI:N");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_bad_input;
  }

  try {
    if (geodesic->parsed()) return cmd_geodesic(o);
    if (cut_time->parsed()) return cmd_cut_time(o);
    if (maxwell->parsed()) return cmd_maxwell(o);
    if (roots->parsed()) return cmd_roots(o);
    if (tt_curve->parsed()) return cmd_tt_curve(o);
    if (symmetry->parsed()) return cmd_symmetry_check(o);
    if (oracle->parsed()) return cmd_oracle_diff(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "se2sr: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::domain_error& e) {
    std::cerr << "se2sr: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::runtime_error& e) {
    std::cerr << "se2sr: " << e.what() << "\n";
    return exit_root_failure;
  }
  return exit_bad_input;
}
