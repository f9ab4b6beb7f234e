#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "aniso/dynamics.hpp"
#include "aniso/media.hpp"

namespace aniso {

using ordered_json = nlohmann::ordered_json;

/// Serializable profile description, the JSON surface of the media module:
///   {"kind": "uniform"|"gaussian-mirage"|"gaussian-ring",
///    "symmetry": "spherical"|"cylindrical", numeric parameters by name}
struct ProfileSpec {
  enum class Kind { Uniform, GaussianMirage, GaussianRing };
  Kind kind = Kind::Uniform;
  Symmetry symmetry = Symmetry::None;
  double n0 = 1.0;
  double epsilon = 0.0, width = 1.0;
  double base = 0.0, amplitude = 0.0, center = 0.0;

  bool operator==(const ProfileSpec&) const = default;
};

RefractiveProfile make_profile(const ProfileSpec& spec);
ProfileSpec profile_from_json(const ordered_json& j);
ordered_json profile_to_json(const ProfileSpec& spec);

struct OutputSpec {
  enum class Format { Csv, Json };
  Format format = Format::Csv;
  std::string path = "trajectory.csv";
  double every = 0.0;  // 0 = every accepted step

  bool operator==(const OutputSpec&) const = default;
};

/// Run configuration; only "profile" is required, the other sections default.
/// Unknown keys anywhere are rejected.
struct RunConfig {
  ProfileSpec profile;
  Vec3 x0{};
  Vec3 v0{};
  IntegratorConfig integrator;
  OutputSpec output;

  bool operator==(const RunConfig& o) const;
};

RunConfig config_from_json(const ordered_json& j);
ordered_json config_to_json(const RunConfig& cfg);
RunConfig load_config(const std::string& path);

// CSV schema: header t,x1,x2,x3,v1,v2,v3,energy, one row per sample, 17
// significant digits
void write_csv(std::ostream& os, const Trajectory& traj);
void write_csv_file(const std::string& path, const Trajectory& traj);
std::vector<TrajectorySample> read_csv_file(const std::string& path);

ordered_json trajectory_to_json(const Trajectory& traj);

}  // namespace aniso
