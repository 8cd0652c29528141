#pragma once

#include <cstddef>

namespace csb {

/// Geometry of the periodic velocity box and its mode set.
///
/// The box is [-T, T]^d with T fixed to pi.  Fields carry modes
/// k in {-N..N}^d, i.e. 2N+1 points per axis in physical space.
/// S is the support radius of the initial data and R = 2S the radius
/// to which the collision integral is truncated.  Valid configs obey
/// T >= (1 + 3*sqrt(2)) * S / 2, which with T = pi bounds S.
struct DomainConfig {
  int dim = 2;                  // d, 2 or 3
  int max_mode = 0;             // N
  double box_half_length = 0.0; // T, always pi
  double support_radius = 0.0;  // S
  double truncation_radius = 0.0; // R = 2S

  int points_per_axis() const { return 2 * max_mode + 1; }
  std::size_t mode_count() const {
    std::size_t n = static_cast<std::size_t>(points_per_axis());
    std::size_t total = n;
    for (int a = 1; a < dim; ++a) total *= n;
    return total;
  }

  bool same_domain(const DomainConfig& other) const {
    return dim == other.dim && max_mode == other.max_mode &&
           support_radius == other.support_radius;
  }
};

/// Largest admissible support radius, 2*pi / (1 + 3*sqrt(2)).
double max_support_radius();

/// Validates (d, N, S) and fills in T = pi, R = 2S.
/// Throws DealiasingViolation when S exceeds the admissible radius by
/// more than 1e-12, and Error for out-of-range d or N.
DomainConfig make_config(int dim, int max_mode, double support_radius);

} // namespace csb
