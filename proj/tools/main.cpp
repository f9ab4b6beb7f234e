#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aniso/closedform.hpp"
#include "aniso/connection.hpp"
#include "aniso/curvature.hpp"
#include "aniso/dynamics.hpp"
#include "aniso/io.hpp"
#include "aniso/metric.hpp"
#include "aniso/svg.hpp"
#include "aniso/verify.hpp"

namespace {

using aniso::ordered_json;

// exit codes: 0 success, 1 config, 2 numerical/domain, 3 empty solution set,
// 4 verify failure
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitEmpty = 3;
constexpr int kExitVerify = 4;

std::vector<double> parse_reals(const std::string& s, size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    out.push_back(std::stod(tok, &used));
    if (used != tok.size()) throw std::invalid_argument(std::string(what) + ": bad number " + tok);
  }
  if (out.size() != n)
    throw std::invalid_argument(std::string(what) + " expects " + std::to_string(n) +
                                " comma-separated reals");
  return out;
}

ordered_json mat_json(const aniso::Mat3& m) {
  ordered_json j = ordered_json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}
ordered_json ten3_json(const aniso::Ten3& t) {
  ordered_json j = ordered_json::array();
  for (const auto& m : t) j.push_back(mat_json(m));
  return j;
}
ordered_json ten4_json(const aniso::Ten4& t) {
  ordered_json j = ordered_json::array();
  for (const auto& x : t) j.push_back(ten3_json(x));
  return j;
}

int cmd_tensors(const std::string& config_path, const std::string& at, const std::string& what) {
  const aniso::RunConfig cfg = aniso::load_config(config_path);
  const auto vals = parse_reals(at, 6, "--at");
  const aniso::PhasePoint p{{vals[0], vals[1], vals[2]}, {vals[3], vals[4], vals[5]}};
  const aniso::RefractiveProfile profile = aniso::make_profile(cfg.profile);

  std::set<std::string> want;
  {
    std::stringstream ss(what);
    std::string tok;
    while (std::getline(ss, tok, ',')) want.insert(tok);
    static const std::set<std::string> known = {"g",        "ginv",       "G",       "N", "L",
                                                "C",        "torsions",   "curvatures",
                                                "metricity"};
    for (const auto& w : want)
      if (!known.count(w)) throw std::invalid_argument("unknown tensor \"" + w + "\" in --what");
    if (want.empty()) throw std::invalid_argument("--what must name at least one tensor");
  }

  ordered_json out;
  out["profile"] = aniso::profile_to_json(cfg.profile);
  out["at"] = {{"x", p.x}, {"y", p.y}};
  const auto [sigma, tau] = aniso::sigma_tau(profile, p);
  out["sigma"] = sigma;
  out["tau"] = tau;
  if (want.count("g")) out["g"] = mat_json(aniso::fundamental_tensor(profile, p));
  if (want.count("ginv")) out["ginv"] = mat_json(aniso::inverse_fundamental_tensor(profile, p));
  if (want.count("G")) out["G"] = aniso::semispray(profile, p);
  if (want.count("N")) out["N"] = mat_json(aniso::nonlinear_connection(profile, p).n);
  if (want.count("L") || want.count("C")) {
    const auto cc = aniso::cartan_closed_form(profile, p);
    if (want.count("L")) out["L"] = ten3_json(cc.L);
    if (want.count("C")) out["C"] = ten3_json(cc.C);
  }
  if (want.count("torsions")) {
    const auto t = aniso::torsions(profile, p);
    out["torsions"] = {{"R", ten3_json(t.R)}, {"P", ten3_json(t.P)}, {"C", ten3_json(t.C)}};
  }
  if (want.count("curvatures")) {
    const auto c = aniso::curvatures(profile, p);
    out["curvatures"] = {{"R", ten4_json(c.R4)}, {"P", ten4_json(c.P4)}, {"S", ten4_json(c.S4)}};
  }
  if (want.count("metricity")) {
    const auto m = aniso::metricity_residuals(profile, p);
    out["metricity"] = {{"h", ten3_json(m.h)},
                        {"v", ten3_json(m.v)},
                        {"h_max", aniso::max_abs(m.h)},
                        {"v_max", aniso::max_abs(m.v)}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_geodesic(const std::string& config_path) {
  const aniso::RunConfig cfg = aniso::load_config(config_path);
  const aniso::RefractiveProfile profile = aniso::make_profile(cfg.profile);
  const aniso::Trajectory traj = aniso::integrate(profile, cfg.x0, cfg.v0, cfg.integrator);

  if (cfg.output.format == aniso::OutputSpec::Format::Csv)
    aniso::write_csv_file(cfg.output.path, traj);
  else {
    std::ofstream out(cfg.output.path);
    if (!out) throw std::runtime_error("cannot open " + cfg.output.path + " for writing");
    out << aniso::trajectory_to_json(traj).dump(2) << "\n";
  }

  double drift = 0.0;
  const double e0 = traj.samples.empty() ? 0.0 : traj.samples.front().energy;
  for (const auto& s : traj.samples)
    drift = std::max(drift, std::abs(s.energy - e0) / std::max(e0, 1e-30));

  ordered_json summary;
  summary["samples"] = traj.samples.size();
  summary["t_end"] = traj.samples.empty() ? cfg.integrator.t0 : traj.samples.back().t;
  summary["energy_drift"] = drift;
  summary["accepted_steps"] = traj.accepted;
  summary["rejected_steps"] = traj.rejected;
  summary["truncated"] = traj.truncated();
  if (traj.truncated()) summary["error"] = traj.message;
  summary["output"] = cfg.output.path;
  std::cout << summary.dump(2) << "\n";
  return traj.truncated() ? kExitNumerical : 0;
}

ordered_json helix_json(const aniso::HelixFamily& h) {
  return {{"kind", "helix"},          {"rho0", h.rho0},
          {"omega0", h.omega0},       {"phi0", h.phi0},
          {"sign_omega", h.sign_omega}, {"sign_sqrt", h.sign_sqrt},
          {"v2", h.v2},               {"residual", h.residual}};
}
ordered_json circle_json(const aniso::CircleFamily& c) {
  return {{"kind", aniso::kind_name(c.kind)},
          {"symmetry", c.symmetry == aniso::Symmetry::Spherical ? "spherical" : "cylindrical"},
          {"radius", c.radius},
          {"plane_param", c.plane_param},
          {"residual", c.residual}};
}
ordered_json line_json(const aniso::LineFamily& l) {
  ordered_json j = {{"kind", aniso::kind_name(l.kind)}, {"residual", l.residual}};
  if (l.kind == aniso::LineKind::CylinderGenerator) {
    j["rho0"] = l.rho0;
    j["phi0"] = l.phi0;
  }
  return j;
}

int cmd_solve(const std::string& kind, const std::string& config_path, const std::string& bracket,
              double rho, bool rho_set) {
  const aniso::RunConfig cfg = aniso::load_config(config_path);
  const aniso::RefractiveProfile profile = aniso::make_profile(cfg.profile);

  double lo = 0.0, hi = 0.0;
  if (!bracket.empty()) {
    const auto b = parse_reals(bracket, 2, "--bracket");
    lo = b[0];
    hi = b[1];
  }

  ordered_json out = ordered_json::array();
  if (kind == "helix") {
    if (!rho_set) throw std::invalid_argument("solve helix requires --rho");
    for (const auto& h : aniso::helix_omegas(profile, rho)) out.push_back(helix_json(h));
  } else if (kind == "circle") {
    if (bracket.empty()) throw std::invalid_argument("solve circle requires --bracket");
    for (const auto& c : aniso::circle_radii(profile, lo, hi)) out.push_back(circle_json(c));
  } else if (kind == "generator") {
    if (bracket.empty()) throw std::invalid_argument("solve generator requires --bracket");
    for (const auto& l : aniso::generator_radii(profile, lo, hi)) out.push_back(line_json(l));
  } else if (kind == "sphere-circles") {
    if (bracket.empty()) throw std::invalid_argument("solve sphere-circles requires --bracket");
    for (const auto& c : aniso::sphere_circle_families(profile, lo, hi))
      out.push_back(circle_json(c));
  } else {
    throw std::invalid_argument("unknown solve kind \"" + kind + "\"");
  }
  std::cout << out.dump(2) << "\n";
  return out.empty() ? kExitEmpty : 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, const std::string& config_path) {
  if (!config_path.empty()) aniso::load_config(config_path);  // validation only
  const auto results = aniso::run_verify(aniso::suite_from_string(suite), seed);
  aniso::print_report(std::cout, results);
  size_t failures = 0;
  for (const auto& r : results)
    if (!r.pass) failures++;
  std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
  return failures == 0 ? 0 : kExitVerify;
}

int cmd_plot(const std::string& csv_path, const std::string& proj, const std::string& out_path) {
  const auto samples = aniso::read_csv_file(csv_path);
  aniso::write_svg_plot(out_path, samples, aniso::projection_from_string(proj));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic ray geometry in graded-index media"};
  app.require_subcommand(1);

  std::string config_path, at, what = "g,ginv,G,N,L,C", bracket, csv_path, out_path = "plot.svg";
  std::string proj = "xy", suite = "all", solve_kind;
  double rho = 0.0;
  uint64_t seed = 0;

  auto* tensors = app.add_subcommand("tensors", "print geometric tensors at a phase point");
  tensors->add_option("--config", config_path, "run configuration (profile section used)")
      ->required();
  tensors->add_option("--at", at, "phase point x1,x2,x3,y1,y2,y3")->required();
  tensors->add_option("--what", what, "comma-separated subset of g,ginv,G,N,L,C,torsions,curvatures,metricity");

  auto* geodesic = app.add_subcommand("geodesic", "integrate the equations of motion");
  geodesic->add_option("--config", config_path, "run configuration")->required();

  auto* solve = app.add_subcommand("solve", "closed-form geodesic families");
  solve->add_option("kind", solve_kind, "helix|circle|generator|sphere-circles")->required();
  solve->add_option("--config", config_path, "run configuration (profile section used)")
      ->required();
  solve->add_option("--bracket", bracket, "radius bracket lo,hi");
  auto* rho_opt = solve->add_option("--rho", rho, "helix radius");

  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  verify->add_option("suite", suite, "all|metric|connection|curvature|dynamics|closedform");
  verify->add_option("--seed", seed, "sample-point seed");
  verify->add_option("--config", config_path, "optional config to validate");

  auto* plot = app.add_subcommand("plot", "render a trajectory CSV as an SVG projection");
  plot->add_option("csv", csv_path, "trajectory CSV path")->required();
  plot->add_option("--proj", proj, "xy|xz|yz|3d-isometric");
  plot->add_option("--out", out_path, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (tensors->parsed()) return cmd_tensors(config_path, at, what);
    if (geodesic->parsed()) return cmd_geodesic(config_path);
    if (solve->parsed())
      return cmd_solve(solve_kind, config_path, bracket, rho, rho_opt->count() > 0);
    if (verify->parsed()) return cmd_verify(suite, seed, config_path);
    if (plot->parsed()) return cmd_plot(csv_path, proj, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
