#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "csb/config.hpp"
#include "csb/kernels.hpp"
#include "csb/lattice.hpp"

namespace csb {

struct DecompositionOptions {
  /// 2D only: apply the a = b rebalance and lay the M directions over
  /// [0, pi/2) with doubled weight.  Invalid for non-constant a.
  bool symmetric_half = false;
  /// 3D only: multiply each weight by sin(theta_p).  Off by default,
  /// matching the plain pi^2/M^2 rule.
  bool jacobian_included = false;
  /// Workers used while filling the per-direction arrays (the result
  /// does not depend on this).
  int threads = 1;
  /// Quadrature order for the radial transforms.
  int quadrature_order = 64;
};

/// The factorized kernel-mode representation
///
///   beta(l, m) ~= sum_p w_p alpha_p(l) alpha'_p(m)
///
/// over a uniform direction grid (M points per angular coordinate,
/// P = M^(d-1) terms), together with the loss diagonal
/// D_m = beta(m, m).  alpha arrays are real, even under l -> -l, and
/// stored dense over the mode lattice.
struct Decomposition {
  DomainConfig config;
  int directions_per_coord = 0; // M
  std::size_t term_count = 0;   // P = M^(d-1)
  bool symmetric_half = false;
  bool jacobian_included = false;

  std::vector<double> weights;                  // P
  std::vector<std::array<double, 3>> directions; // P unit vectors e_p
  std::vector<double> alpha;                    // P x n^d, alpha_p(l)
  std::vector<double> alpha_prime;              // P x n^d, alpha'_p(m)
  std::vector<double> loss_diagonal;            // n^d, D_m

  std::size_t mode_count() const { return loss_diagonal.size(); }
  const double* alpha_row(std::size_t p) const { return alpha.data() + p * mode_count(); }
  const double* alpha_prime_row(std::size_t p) const {
    return alpha_prime.data() + p * mode_count();
  }
};

Decomposition decompose_2d(const DomainConfig& config, const KernelModel& kernel,
                           int directions, const DecompositionOptions& opts = {});

Decomposition decompose_3d(const DomainConfig& config, const KernelModel& kernel,
                           int directions, const DecompositionOptions& opts = {});

/// Dispatches on config.dim.
Decomposition decompose(const DomainConfig& config, const KernelModel& kernel,
                        int directions, const DecompositionOptions& opts = {});

/// Materializes sum_p w_p alpha_p(l) alpha'_p(m).
double reconstruct_beta(const Decomposition& dec, const Mode& l, const Mode& m);

/// Independent route to beta in 2D: adaptive quadrature of
///   int_0^pi phi_a(l . e_theta) phi_b(m . e_(theta+pi/2)) d theta
/// to absolute tolerance tol.
double beta_oracle_2d(const DomainConfig& config, const KernelModel& kernel,
                      const Mode& l, const Mode& m, double tol,
                      int quadrature_order = 64);

} // namespace csb
