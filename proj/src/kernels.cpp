#include "csb/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csb/errors.hpp"

namespace csb {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(ax) / ax;
}

double phi2_closed(double radius, double s) {
  return 2.0 * radius * sinc(radius * std::abs(s));
}

double phi3_closed(double radius, double s) {
  const double rs = radius * std::abs(s);
  const double half = sinc(0.5 * rs);
  return radius * radius * (2.0 * sinc(rs) - half * half);
}

// ---------------------------------------------------------------------------
// KernelModel

double KernelModel::default_maxwell2d_constant() { return 1.0 / (2.0 * std::numbers::pi); }
double KernelModel::default_hard_sphere3d_constant() { return 1.0 / (4.0 * std::numbers::pi); }

KernelModel KernelModel::maxwell2d(double constant) {
  KernelModel k;
  k.family_ = KernelFamily::Maxwell2D;
  k.dim_ = 2;
  k.constant_ = constant;
  k.gamma_ = 0.0;
  k.a_scale_ = 2.0 * constant;
  k.a_power_ = 0.0;
  return k;
}

KernelModel KernelModel::hard_sphere3d(double constant) {
  KernelModel k;
  k.family_ = KernelFamily::HardSphere3D;
  k.dim_ = 3;
  k.constant_ = constant;
  k.gamma_ = 1.0;
  k.a_scale_ = 4.0 * constant;
  k.a_power_ = 0.0;
  return k;
}

KernelModel KernelModel::vhs(int dim, double gamma, double constant) {
  if (dim != 2 && dim != 3) throw Error("vhs kernel: dimension must be 2 or 3");
  if (gamma <= -1.0 || gamma > 1.0)
    throw NonIntegrable("vhs kernel: gamma must lie in (-1, 1], got " + std::to_string(gamma));
  KernelModel k;
  k.family_ = KernelFamily::Vhs;
  k.dim_ = dim;
  k.constant_ = constant;
  k.gamma_ = gamma;
  k.a_scale_ = (dim == 2 ? 2.0 : 4.0) * constant;
  k.a_power_ = (dim == 2) ? gamma : gamma - 1.0;
  return k;
}

KernelModel KernelModel::unit(int dim) {
  return dim == 2 ? maxwell2d(0.5) : hard_sphere3d(0.25);
}

double KernelModel::eval_a(double rho) const {
  if (a_power_ == 0.0) return a_scale_;
  return a_scale_ * std::pow(std::abs(rho), a_power_);
}

double KernelModel::eval_b(double) const { return b_scale_; }

double KernelModel::a_const() const {
  if (!a_is_constant()) throw Error("kernel a factor is not constant");
  return a_scale_;
}

KernelModel KernelModel::symmetric_split() const {
  if (!a_is_constant())
    throw SymmetricFlagInvalid("symmetric split requires a constant kernel factor (a = b)");
  KernelModel k = *this;
  const double balanced = std::sqrt(a_scale_ * b_scale_);
  k.a_scale_ = balanced;
  k.b_scale_ = balanced;
  k.symmetric_split_ = true;
  return k;
}

// ---------------------------------------------------------------------------
// RadialTransform

RadialTransform::RadialTransform(int dim, double radius, int order)
    : dim_(dim), radius_(radius), order_(order) {
  if (dim != 2 && dim != 3) throw Error("radial transform: dimension must be 2 or 3");
  if (!(radius > 0.0)) throw Error("radial transform: radius must be positive");
  if (order < 4) throw Error("radial transform: quadrature order too small");
  GaussLegendre::of_order(order_); // warm the cache
}

std::vector<double> RadialTransform::phi_panels(double s, double singular_power) const {
  const double mu = singular_power + (dim_ - 2);
  // Per-panel phase budget: GL_n resolves ~n/2 radians comfortably.
  const double max_phase = 0.5 * order_;
  const double abs_s = std::abs(s);

  std::vector<double> bounds;
  double lower = 0.0;
  const bool graded = !(mu == std::floor(mu) && mu >= 0.0);
  if (graded) {
    // Geometric grading absorbs the |rho|^mu endpoint behavior; the
    // dropped head [0, R/2^J] contributes below 2^-52 relatively.
    const int levels = static_cast<int>(std::ceil(52.0 / (mu + 1.0)));
    lower = radius_ * std::ldexp(1.0, -levels);
    bounds.push_back(lower);
    for (int j = levels - 1; j >= 1; --j) bounds.push_back(radius_ * std::ldexp(1.0, -j));
    bounds.push_back(radius_);
  } else {
    bounds.push_back(0.0);
    bounds.push_back(radius_);
  }

  if (abs_s * radius_ <= max_phase) return bounds;

  // Split long panels against the oscillation of cos(rho s).
  std::vector<double> refined;
  refined.push_back(bounds.front());
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i];
    const double b = bounds[i + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) * abs_s / max_phase)));
    for (int p = 1; p <= pieces; ++p)
      refined.push_back(a + (b - a) * static_cast<double>(p) / pieces);
  }
  return refined;
}

double RadialTransform::phi(const std::function<double(double)>& a, double s,
                            double singular_power) const {
  const double mu = singular_power + (dim_ - 2);
  if (mu <= -1.0)
    throw NonIntegrable("radial integrand |rho|^" + std::to_string(mu) +
                        " is not integrable at 0");
  const double abs_s = std::abs(s); // phi is even in s by construction
  const std::vector<double> bounds = phi_panels(abs_s, singular_power);
  const int weight_pow = dim_ - 2;
  auto integrand = [&](double rho) {
    double w = (weight_pow == 0) ? 1.0 : rho;
    return w * a(rho) * std::cos(rho * abs_s);
  };
  return 2.0 * composite_gl(integrand, bounds, order_);
}

double RadialTransform::phi_a(const KernelModel& kernel, double s) const {
  if (kernel.a_is_constant()) {
    const double c = kernel.a_const();
    return dim_ == 2 ? c * phi2_closed(radius_, s) : c * phi3_closed(radius_, s);
  }
  return phi([&](double rho) { return kernel.eval_a(rho); }, s, kernel.a_power());
}

double RadialTransform::phi_b(const KernelModel& kernel, double s) const {
  const double c = kernel.b_const();
  return dim_ == 2 ? c * phi2_closed(radius_, s) : c * phi3_closed(radius_, s);
}

double RadialTransform::psi(const std::function<double(double)>& b, double r,
                            double singular_power) const {
  if (dim_ != 3) throw Error("psi is defined for d = 3");
  const double abs_r = std::abs(r);
  // Integrand phi(r cos(theta)) oscillates ~ r R / (2 pi) times on
  // [0, pi/2]; keep the per-panel phase within the GL budget.
  const double max_phase = 0.5 * order_;
  const int pieces = std::max(1, static_cast<int>(std::ceil(abs_r * radius_ / max_phase)));
  std::vector<double> bounds(pieces + 1);
  for (int p = 0; p <= pieces; ++p)
    bounds[p] = 0.5 * std::numbers::pi * static_cast<double>(p) / pieces;
  auto integrand = [&](double theta) {
    return phi(b, abs_r * std::cos(theta), singular_power);
  };
  return 2.0 * composite_gl(integrand, bounds, order_);
}

double RadialTransform::psi_b(const KernelModel& kernel, double r) const {
  if (dim_ != 3) throw Error("psi is defined for d = 3");
  const double c = kernel.b_const();
  const double abs_r = std::abs(r);
  const double max_phase = 0.5 * order_;
  const int pieces = std::max(1, static_cast<int>(std::ceil(abs_r * radius_ / max_phase)));
  std::vector<double> bounds(pieces + 1);
  for (int p = 0; p <= pieces; ++p)
    bounds[p] = 0.5 * std::numbers::pi * static_cast<double>(p) / pieces;
  auto integrand = [&](double theta) {
    return phi3_closed(radius_, abs_r * std::cos(theta));
  };
  return 2.0 * c * composite_gl(integrand, bounds, order_);
}

double phi_radial_quad(const RadialTransform& t,
                       const std::function<double(double)>& a, double s,
                       double singular_power) {
  return t.phi(a, s, singular_power);
}

double psi3_quad(const RadialTransform& t,
                 const std::function<double(double)>& b, double r,
                 double singular_power) {
  return t.psi(b, r, singular_power);
}

} // namespace csb
