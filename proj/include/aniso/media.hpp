#pragma once
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "aniso/geom.hpp"

namespace aniso {

enum class Symmetry { None, Cylindrical, Spherical };

/// Refractive-index profile of the medium. Everything downstream consumes the
/// anisotropy strength gamma(x) = sqrt(n^2(x) - 1) and its spatial gradient;
/// radial profiles expose the generating function f with gamma = f(s), where s
/// is the cylinder radius sqrt(x1^2+x2^2) or the sphere radius |x|.
///
/// Profiles are immutable after construction; all evaluation is pure.
class RefractiveProfile {
 public:
  using RadialFn = std::function<double(double)>;

  // n(x) = n0 >= 1 everywhere
  static RefractiveProfile uniform(double n0);

  // n(x) = 1 + epsilon * exp(-s^2/width^2)
  static RefractiveProfile gaussian_mirage(double epsilon, double width, Symmetry sym);

  // f(s) = base + amplitude * exp(-(s-center)^2/width^2); has f'(center) = 0
  static RefractiveProfile gaussian_ring(double base, double amplitude, double center,
                                         double width);

  // user-supplied gamma = f(s) on s > 0; axis_limit = {f(0+), f'(0+)} if the
  // profile extends continuously to the symmetry axis/center
  static RefractiveProfile cylindrical_radial(RadialFn f, RadialFn f_prime,
                                              std::optional<std::pair<double, double>> axis_limit = {});
  static RefractiveProfile spherical_radial(RadialFn f, RadialFn f_prime,
                                            std::optional<std::pair<double, double>> axis_limit = {});

  double gamma(const Vec3& x) const;
  Vec3 gamma_gradient(const Vec3& x) const;

  // central-difference oracle for gamma_gradient, one Richardson level
  Vec3 gamma_gradient_fd(const Vec3& x, double h) const;
  Vec3 gamma_gradient_fd(const Vec3& x) const;  // h = max(1,|x|_inf) * eps^(1/3)

  // (f(s), f'(s)); throws std::invalid_argument for uniform profiles
  std::pair<double, double> radial_f(double s) const;

  double refractive_index(const Vec3& x) const;

  Symmetry symmetry() const { return symmetry_; }
  bool is_uniform() const { return kind_ == Kind::Uniform; }
  std::string describe() const;

  enum class Kind { Uniform, GaussianMirage, GaussianRing, UserRadial };
  Kind kind() const { return kind_; }
  // builtin parameters (meaningful per kind, used by serialization)
  double n0() const { return n0_; }
  double epsilon() const { return epsilon_; }
  double width() const { return width_; }
  double base() const { return base_; }
  double amplitude() const { return amplitude_; }
  double center() const { return center_; }

 private:
  RefractiveProfile() = default;

  double symmetry_radius(const Vec3& x) const;

  Kind kind_ = Kind::Uniform;
  Symmetry symmetry_ = Symmetry::None;
  double n0_ = 1.0;
  double epsilon_ = 0.0, width_ = 1.0;
  double base_ = 0.0, amplitude_ = 0.0, center_ = 0.0;
  RadialFn user_f_, user_fp_;
  std::optional<std::pair<double, double>> axis_limit_;
};

}  // namespace aniso
