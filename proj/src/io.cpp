#include "aniso/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace aniso {

namespace {

void reject_unknown_keys(const ordered_json& j, std::initializer_list<const char*> known,
                         const char* where) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw std::invalid_argument(std::string("unknown key \"") + key + "\" in " + where);
  }
}

double require_number(const ordered_json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("missing key \"") + key + "\" in " + where);
  const auto& v = j.at(key);
  if (!v.is_number())
    throw std::invalid_argument(std::string("key \"") + key + "\" in " + where +
                                " must be a number");
  return v.get<double>();
}

Symmetry symmetry_from_string(const std::string& s) {
  if (s == "spherical") return Symmetry::Spherical;
  if (s == "cylindrical") return Symmetry::Cylindrical;
  throw std::invalid_argument("symmetry must be \"spherical\" or \"cylindrical\"");
}

Vec3 vec3_from_json(const ordered_json& j, const char* where) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string(where) + " must be an array of 3 numbers");
  Vec3 v{};
  for (int i = 0; i < 3; i++) {
    if (!j[i].is_number())
      throw std::invalid_argument(std::string(where) + " must be an array of 3 numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

}  // namespace

RefractiveProfile make_profile(const ProfileSpec& s) {
  switch (s.kind) {
    case ProfileSpec::Kind::Uniform:
      return RefractiveProfile::uniform(s.n0);
    case ProfileSpec::Kind::GaussianMirage:
      return RefractiveProfile::gaussian_mirage(s.epsilon, s.width, s.symmetry);
    case ProfileSpec::Kind::GaussianRing:
      return RefractiveProfile::gaussian_ring(s.base, s.amplitude, s.center, s.width);
  }
  throw std::logic_error("unreachable profile kind");
}

ProfileSpec profile_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
  if (!j.contains("kind")) throw std::invalid_argument("profile requires a \"kind\" key");
  const std::string kind = j.at("kind").get<std::string>();
  ProfileSpec s;
  if (kind == "uniform") {
    reject_unknown_keys(j, {"kind", "n0"}, "profile");
    s.kind = ProfileSpec::Kind::Uniform;
    s.symmetry = Symmetry::None;
    s.n0 = require_number(j, "n0", "profile");
  } else if (kind == "gaussian-mirage") {
    reject_unknown_keys(j, {"kind", "symmetry", "epsilon", "width"}, "profile");
    if (!j.contains("symmetry"))
      throw std::invalid_argument("gaussian-mirage profile requires \"symmetry\"");
    s.kind = ProfileSpec::Kind::GaussianMirage;
    s.symmetry = symmetry_from_string(j.at("symmetry").get<std::string>());
    s.epsilon = require_number(j, "epsilon", "profile");
    s.width = require_number(j, "width", "profile");
  } else if (kind == "gaussian-ring") {
    reject_unknown_keys(j, {"kind", "symmetry", "base", "amplitude", "center", "width"},
                        "profile");
    s.kind = ProfileSpec::Kind::GaussianRing;
    s.symmetry = Symmetry::Cylindrical;
    if (j.contains("symmetry") &&
        symmetry_from_string(j.at("symmetry").get<std::string>()) != Symmetry::Cylindrical)
      throw std::invalid_argument("gaussian-ring profiles are cylindrical");
    s.base = require_number(j, "base", "profile");
    s.amplitude = require_number(j, "amplitude", "profile");
    s.center = require_number(j, "center", "profile");
    s.width = require_number(j, "width", "profile");
  } else {
    throw std::invalid_argument("unknown profile kind \"" + kind + "\"");
  }
  make_profile(s);  // parameter validation
  return s;
}

ordered_json profile_to_json(const ProfileSpec& s) {
  ordered_json j;
  switch (s.kind) {
    case ProfileSpec::Kind::Uniform:
      j["kind"] = "uniform";
      j["n0"] = s.n0;
      break;
    case ProfileSpec::Kind::GaussianMirage:
      j["kind"] = "gaussian-mirage";
      j["symmetry"] = s.symmetry == Symmetry::Spherical ? "spherical" : "cylindrical";
      j["epsilon"] = s.epsilon;
      j["width"] = s.width;
      break;
    case ProfileSpec::Kind::GaussianRing:
      j["kind"] = "gaussian-ring";
      j["symmetry"] = "cylindrical";
      j["base"] = s.base;
      j["amplitude"] = s.amplitude;
      j["center"] = s.center;
      j["width"] = s.width;
      break;
  }
  return j;
}

bool RunConfig::operator==(const RunConfig& o) const {
  return profile == o.profile && x0 == o.x0 && v0 == o.v0 &&
         integrator.rel_tol == o.integrator.rel_tol &&
         integrator.abs_tol == o.integrator.abs_tol &&
         integrator.max_step == o.integrator.max_step && integrator.t0 == o.integrator.t0 &&
         integrator.t1 == o.integrator.t1 &&
         integrator.sample_every == o.integrator.sample_every && output == o.output;
}

RunConfig config_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  reject_unknown_keys(j, {"profile", "initial", "integrator", "output"}, "config");
  if (!j.contains("profile")) throw std::invalid_argument("config requires a \"profile\" section");

  RunConfig cfg;
  cfg.profile = profile_from_json(j.at("profile"));

  if (j.contains("initial")) {
    const auto& in = j.at("initial");
    reject_unknown_keys(in, {"x", "v"}, "initial");
    if (in.contains("x")) cfg.x0 = vec3_from_json(in.at("x"), "initial.x");
    if (in.contains("v")) cfg.v0 = vec3_from_json(in.at("v"), "initial.v");
  }
  if (j.contains("integrator")) {
    const auto& in = j.at("integrator");
    reject_unknown_keys(in, {"rel_tol", "abs_tol", "max_step", "t_span"}, "integrator");
    if (in.contains("rel_tol")) cfg.integrator.rel_tol = require_number(in, "rel_tol", "integrator");
    if (in.contains("abs_tol")) cfg.integrator.abs_tol = require_number(in, "abs_tol", "integrator");
    if (in.contains("max_step"))
      cfg.integrator.max_step = require_number(in, "max_step", "integrator");
    if (in.contains("t_span")) {
      const auto& ts = in.at("t_span");
      if (!ts.is_array() || ts.size() != 2 || !ts[0].is_number() || !ts[1].is_number())
        throw std::invalid_argument("integrator.t_span must be [t0, t1]");
      cfg.integrator.t0 = ts[0].get<double>();
      cfg.integrator.t1 = ts[1].get<double>();
    }
  }
  if (j.contains("output")) {
    const auto& out = j.at("output");
    reject_unknown_keys(out, {"format", "path", "every"}, "output");
    if (out.contains("format")) {
      const std::string f = out.at("format").get<std::string>();
      if (f == "csv")
        cfg.output.format = OutputSpec::Format::Csv;
      else if (f == "json")
        cfg.output.format = OutputSpec::Format::Json;
      else
        throw std::invalid_argument("output.format must be \"csv\" or \"json\"");
    }
    if (out.contains("path")) cfg.output.path = out.at("path").get<std::string>();
    if (out.contains("every")) cfg.output.every = require_number(out, "every", "output");
  }
  cfg.integrator.sample_every = cfg.output.every;
  cfg.integrator.validate();
  return cfg;
}

ordered_json config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["profile"] = profile_to_json(cfg.profile);
  j["initial"] = {{"x", cfg.x0}, {"v", cfg.v0}};
  j["integrator"] = {{"rel_tol", cfg.integrator.rel_tol},
                     {"abs_tol", cfg.integrator.abs_tol},
                     {"max_step", cfg.integrator.max_step},
                     {"t_span", {cfg.integrator.t0, cfg.integrator.t1}}};
  j["output"] = {{"format", cfg.output.format == OutputSpec::Format::Csv ? "csv" : "json"},
                 {"path", cfg.output.path},
                 {"every", cfg.output.every}};
  return j;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x1,x2,x3,v1,v2,v3,energy\n";
  char buf[32];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << sep;
  };
  for (const auto& s : traj.samples) {
    put(s.t, ',');
    put(s.x[0], ',');
    put(s.x[1], ',');
    put(s.x[2], ',');
    put(s.v[0], ',');
    put(s.v[1], ',');
    put(s.v[2], ',');
    put(s.energy, '\n');
  }
}

void write_csv_file(const std::string& path, const Trajectory& traj) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(out, traj);
}

std::vector<TrajectorySample> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open CSV file " + path);
  std::string line;
  if (!std::getline(in, line) || line != "t,x1,x2,x3,v1,v2,v3,energy")
    throw std::invalid_argument("malformed CSV header in " + path);
  std::vector<TrajectorySample> samples;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    line_no++;
    if (line.empty()) continue;
    TrajectorySample s{};
    double* fields[8] = {&s.t, &s.x[0], &s.x[1], &s.x[2], &s.v[0], &s.v[1], &s.v[2], &s.energy};
    std::istringstream ls(line);
    std::string tok;
    int n = 0;
    while (std::getline(ls, tok, ',')) {
      if (n >= 8)
        throw std::invalid_argument("malformed CSV row at line " + std::to_string(line_no));
      try {
        size_t used = 0;
        *fields[n] = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed CSV value at line " + std::to_string(line_no));
      }
      n++;
    }
    if (n != 8) throw std::invalid_argument("malformed CSV row at line " + std::to_string(line_no));
    samples.push_back(s);
  }
  return samples;
}

ordered_json trajectory_to_json(const Trajectory& traj) {
  ordered_json rows = ordered_json::array();
  for (const auto& s : traj.samples)
    rows.push_back({{"t", s.t},
                    {"x", {s.x[0], s.x[1], s.x[2]}},
                    {"v", {s.v[0], s.v[1], s.v[2]}},
                    {"energy", s.energy}});
  return rows;
}

}  // namespace aniso
