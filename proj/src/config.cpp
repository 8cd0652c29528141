#include "csb/config.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "csb/errors.hpp"

namespace csb {

double max_support_radius() {
  return 2.0 * std::numbers::pi / (1.0 + 3.0 * std::numbers::sqrt2);
}

DomainConfig make_config(int dim, int max_mode, double support_radius) {
  if (dim != 2 && dim != 3)
    throw Error("dimension must be 2 or 3, got " + std::to_string(dim));
  if (max_mode < 1)
    throw Error("max mode N must be >= 1, got " + std::to_string(max_mode));
  if (!(support_radius > 0.0))
    throw Error("support radius S must be positive");

  const double s_max = max_support_radius();
  if (support_radius > s_max + 1e-12)
    throw DealiasingViolation("support radius " + std::to_string(support_radius) +
                              " exceeds the admissible " + std::to_string(s_max) +
                              " for the pi box");

  DomainConfig cfg;
  cfg.dim = dim;
  cfg.max_mode = max_mode;
  cfg.box_half_length = std::numbers::pi;
  cfg.support_radius = support_radius;
  cfg.truncation_radius = 2.0 * support_radius;
  return cfg;
}

} // namespace csb
