#pragma once

#include <array>
#include <cstddef>

#include "csb/config.hpp"

namespace csb {

/// A d-dimensional mode index.  For d = 2 the last component is 0.
using Mode = std::array<int, 3>;

/// Flat indexing over the mode lattice {-N..N}^d, row-major with axis 0
/// slowest and each component offset by +N.
struct Lattice {
  int dim;
  int max_mode;
  int n; // points per axis, 2N+1

  static Lattice of(const DomainConfig& cfg) {
    return Lattice{cfg.dim, cfg.max_mode, cfg.points_per_axis()};
  }

  std::size_t size() const {
    std::size_t total = static_cast<std::size_t>(n);
    for (int a = 1; a < dim; ++a) total *= static_cast<std::size_t>(n);
    return total;
  }

  bool contains(const Mode& k) const {
    for (int a = 0; a < dim; ++a)
      if (k[a] < -max_mode || k[a] > max_mode) return false;
    return true;
  }

  std::size_t flat(const Mode& k) const {
    std::size_t idx = static_cast<std::size_t>(k[0] + max_mode);
    for (int a = 1; a < dim; ++a)
      idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(k[a] + max_mode);
    return idx;
  }

  Mode at(std::size_t idx) const {
    Mode k{0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
      k[a] = static_cast<int>(idx % static_cast<std::size_t>(n)) - max_mode;
      idx /= static_cast<std::size_t>(n);
    }
    return k;
  }

  Mode negate(const Mode& k) const { return Mode{-k[0], -k[1], -k[2]}; }
};

} // namespace csb
