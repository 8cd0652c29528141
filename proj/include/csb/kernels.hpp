#pragma once

#include <functional>

#include "csb/quadrature.hpp"

namespace csb {

/// sin(x)/x with a series fallback near zero.
double sinc(double x);

enum class KernelFamily { Maxwell2D, HardSphere3D, Vhs };

/// A collision kernel whose Carleman-form weight factorizes as
/// B~(x, y) = a(|x|) b(|y|).  The supported families put the whole
/// constant into a and keep b = 1:
///
///   Maxwell2D      a = 2C               (d = 2)
///   HardSphere3D   a = 4C               (d = 3)
///   Vhs            a = 2^(d-1) C |rho|^(gamma - d + 2), gamma in (-1, 1]
///
/// When the symmetric split is enabled (legal only for constant a) the
/// factors are rebalanced to a = b = sqrt(2^(d-1) C) so that the
/// half-interval direction rule applies.
class KernelModel {
public:
  static KernelModel maxwell2d(double constant = default_maxwell2d_constant());
  static KernelModel hard_sphere3d(double constant = default_hard_sphere3d_constant());
  static KernelModel vhs(int dim, double gamma, double constant = 1.0);
  /// a = b = 1; the B~ = 1 case used throughout validation.
  static KernelModel unit(int dim);

  /// Tied to the reference-solution clock for Maxwellian molecules.
  static double default_maxwell2d_constant();
  static double default_hard_sphere3d_constant();

  KernelFamily family() const { return family_; }
  int dim() const { return dim_; }
  double constant() const { return constant_; }
  double gamma() const { return gamma_; }

  double eval_a(double rho) const;
  double eval_b(double rho) const;

  /// Exponent of |rho| in a near 0 (0 for the constant families).
  double a_power() const { return a_power_; }
  double b_power() const { return 0.0; }

  bool a_is_constant() const { return a_power_ == 0.0; }
  bool b_is_constant() const { return true; }
  double a_const() const;
  double b_const() const { return b_scale_; }

  /// Kernel with both factors equal to sqrt(a*b); requires constant a.
  KernelModel symmetric_split() const;
  bool is_symmetric_split() const { return symmetric_split_; }

private:
  KernelModel() = default;
  KernelFamily family_ = KernelFamily::Maxwell2D;
  int dim_ = 2;
  double constant_ = 1.0;
  double gamma_ = 0.0;
  double a_scale_ = 1.0; // coefficient in a = a_scale * |rho|^a_power
  double a_power_ = 0.0;
  double b_scale_ = 1.0;
  bool symmetric_split_ = false;
};

/// Radial integrals behind the direction decomposition,
///
///   d=2:  phi(s) = int_{-R}^{R} a(rho) e^(i rho s) d rho
///   d=3:  phi(s) = int_{-R}^{R} |rho| a(rho) e^(i rho s) d rho
///
/// evaluated as 2 int_0^R rho^(d-2) a(rho) cos(rho s) d rho (the
/// imaginary part vanishes by parity and is never formed), plus the
/// polar average psi used by the 3D decomposition.  Quadrature is
/// composite Gauss-Legendre, split against the cos oscillation and
/// geometrically graded toward 0 when a carries a fractional power.
class RadialTransform {
public:
  RadialTransform(int dim, double radius, int order = 64);

  int dim() const { return dim_; }
  double radius() const { return radius_; }
  int order() const { return order_; }

  /// Integral above for a generic integrable weight a.  singular_power
  /// describes a ~ |rho|^power near 0 and drives the grading; the
  /// combined exponent must stay > -1 or NonIntegrable is thrown.
  double phi(const std::function<double(double)>& a, double s,
             double singular_power = 0.0) const;

  /// Same integral for a kernel model's a factor (fast path when a is
  /// constant and the closed forms apply).
  double phi_a(const KernelModel& kernel, double s) const;
  /// ... and the b factor.
  double phi_b(const KernelModel& kernel, double s) const;

  /// psi(r) = int_0^pi phi_b(r cos(theta)) d theta, d = 3 only,
  /// computed as 2 int_0^(pi/2) by evenness of cos about pi/2.
  double psi(const std::function<double(double)>& b, double r,
             double singular_power = 0.0) const;
  double psi_b(const KernelModel& kernel, double r) const;

private:
  int dim_;
  double radius_;
  int order_;

  std::vector<double> phi_panels(double s, double singular_power) const;
};

/// phi for a = 1 in d = 2: 2 R Sinc(R s).
double phi2_closed(double radius, double s);

/// phi for a = 1 in d = 3: R^2 [2 Sinc(R s) - Sinc^2(R s / 2)].
double phi3_closed(double radius, double s);

/// Spec-level conveniences over RadialTransform.
double phi_radial_quad(const RadialTransform& t,
                       const std::function<double(double)>& a, double s,
                       double singular_power = 0.0);
double psi3_quad(const RadialTransform& t,
                 const std::function<double(double)>& b, double r,
                 double singular_power = 0.0);

} // namespace csb
