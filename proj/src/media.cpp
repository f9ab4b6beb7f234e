#include "aniso/media.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace aniso {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

RefractiveProfile RefractiveProfile::uniform(double n0) {
  if (!(n0 >= 1.0)) throw std::invalid_argument("uniform profile requires n0 >= 1");
  RefractiveProfile p;
  p.kind_ = Kind::Uniform;
  p.symmetry_ = Symmetry::None;
  p.n0_ = n0;
  return p;
}

RefractiveProfile RefractiveProfile::gaussian_mirage(double epsilon, double width, Symmetry sym) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("gaussian-mirage requires epsilon > 0");
  if (!(width > 0.0)) throw std::invalid_argument("gaussian-mirage requires width > 0");
  if (sym == Symmetry::None) throw std::invalid_argument("gaussian-mirage requires a radial symmetry");
  RefractiveProfile p;
  p.kind_ = Kind::GaussianMirage;
  p.symmetry_ = sym;
  p.epsilon_ = epsilon;
  p.width_ = width;
  return p;
}

RefractiveProfile RefractiveProfile::gaussian_ring(double base, double amplitude, double center,
                                                   double width) {
  if (!(base > 0.0)) throw std::invalid_argument("gaussian-ring requires base > 0");
  if (!(center > 0.0)) throw std::invalid_argument("gaussian-ring requires center > 0");
  if (!(width > 0.0)) throw std::invalid_argument("gaussian-ring requires width > 0");
  if (!(base + std::min(0.0, amplitude) > 0.0))
    throw std::invalid_argument("gaussian-ring requires f = base + amplitude*exp(...) > 0");
  RefractiveProfile p;
  p.kind_ = Kind::GaussianRing;
  p.symmetry_ = Symmetry::Cylindrical;
  p.base_ = base;
  p.amplitude_ = amplitude;
  p.center_ = center;
  p.width_ = width;
  return p;
}

RefractiveProfile RefractiveProfile::cylindrical_radial(
    RadialFn f, RadialFn f_prime, std::optional<std::pair<double, double>> axis_limit) {
  if (!f || !f_prime) throw std::invalid_argument("radial profile requires f and f'");
  RefractiveProfile p;
  p.kind_ = Kind::UserRadial;
  p.symmetry_ = Symmetry::Cylindrical;
  p.user_f_ = std::move(f);
  p.user_fp_ = std::move(f_prime);
  p.axis_limit_ = axis_limit;
  return p;
}

RefractiveProfile RefractiveProfile::spherical_radial(
    RadialFn f, RadialFn f_prime, std::optional<std::pair<double, double>> axis_limit) {
  RefractiveProfile p = cylindrical_radial(std::move(f), std::move(f_prime), axis_limit);
  p.symmetry_ = Symmetry::Spherical;
  return p;
}

double RefractiveProfile::symmetry_radius(const Vec3& x) const {
  return symmetry_ == Symmetry::Cylindrical ? std::hypot(x[0], x[1]) : norm(x);
}

std::pair<double, double> RefractiveProfile::radial_f(double s) const {
  switch (kind_) {
    case Kind::Uniform:
      throw std::invalid_argument("uniform profile has no radial function");
    case Kind::GaussianMirage: {
      // f = sqrt(2 eps E + eps^2 E^2), E = exp(-s^2/width^2)
      const double e = std::exp(-s * s / (width_ * width_));
      const double f2 = 2.0 * epsilon_ * e + epsilon_ * epsilon_ * e * e;
      if (f2 <= 0.0) return {0.0, 0.0};  // exponent underflow far from the center
      const double f = std::sqrt(f2);
      const double n = 1.0 + epsilon_ * e;
      const double np = -2.0 * s * epsilon_ / (width_ * width_) * e;
      return {f, n * np / f};
    }
    case Kind::GaussianRing: {
      const double d = s - center_;
      const double e = std::exp(-d * d / (width_ * width_));
      return {base_ + amplitude_ * e, -2.0 * d / (width_ * width_) * amplitude_ * e};
    }
    case Kind::UserRadial: {
      if (s <= 0.0) {
        if (axis_limit_) return *axis_limit_;
        throw std::domain_error("radial profile undefined at the symmetry axis/center");
      }
      return {user_f_(s), user_fp_(s)};
    }
  }
  throw std::logic_error("unreachable profile kind");
}

double RefractiveProfile::gamma(const Vec3& x) const {
  if (kind_ == Kind::Uniform) return std::sqrt(n0_ * n0_ - 1.0);
  return radial_f(symmetry_radius(x)).first;
}

Vec3 RefractiveProfile::gamma_gradient(const Vec3& x) const {
  if (kind_ == Kind::Uniform) return {0.0, 0.0, 0.0};
  const double s = symmetry_radius(x);
  if (s == 0.0) {
    // the gradient field f'(s) * s_hat extends continuously to the axis/center
    // only when f'(0+) = 0
    const double fp0 = radial_f(0.0).second;
    if (fp0 == 0.0) return {0.0, 0.0, 0.0};
    throw std::domain_error("gamma gradient undefined at the symmetry axis/center");
  }
  const double fp = radial_f(s).second;
  if (symmetry_ == Symmetry::Cylindrical) return {fp * x[0] / s, fp * x[1] / s, 0.0};
  return {fp * x[0] / s, fp * x[1] / s, fp * x[2] / s};
}

Vec3 RefractiveProfile::gamma_gradient_fd(const Vec3& x, double h) const {
  auto central = [&](double step) {
    Vec3 g{};
    for (int k = 0; k < 3; k++) {
      Vec3 xp = x, xm = x;
      xp[k] += step;
      xm[k] -= step;
      g[k] = (gamma(xp) - gamma(xm)) / (2.0 * step);
    }
    return g;
  };
  const Vec3 d1 = central(h);
  const Vec3 d2 = central(h / 2.0);
  return (1.0 / 3.0) * (4.0 * d2 - d1);
}

Vec3 RefractiveProfile::gamma_gradient_fd(const Vec3& x) const {
  const double h = std::max(1.0, max_abs(x)) * std::cbrt(kEps);
  return gamma_gradient_fd(x, h);
}

double RefractiveProfile::refractive_index(const Vec3& x) const {
  const double g = gamma(x);
  return std::sqrt(1.0 + g * g);
}

std::string RefractiveProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Uniform:
      os << "uniform n0=" << n0_;
      break;
    case Kind::GaussianMirage:
      os << "gaussian-mirage eps=" << epsilon_ << " width=" << width_
         << (symmetry_ == Symmetry::Spherical ? " spherical" : " cylindrical");
      break;
    case Kind::GaussianRing:
      os << "gaussian-ring base=" << base_ << " amp=" << amplitude_ << " center=" << center_
         << " width=" << width_;
      break;
    case Kind::UserRadial:
      os << "user-radial " << (symmetry_ == Symmetry::Spherical ? "spherical" : "cylindrical");
      break;
  }
  return os.str();
}

}  // namespace aniso
