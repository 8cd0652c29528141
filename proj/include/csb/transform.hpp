#pragma once

#include <span>
#include <vector>

#include "csb/fourier_field.hpp"

namespace csb {

namespace detail {
struct FftPlan; // hides the FFTW handles
}

/// Transforms between point values on the uniform grid over [-pi, pi)^d
/// (2N+1 points per axis, axis 0 slowest) and Fourier coefficients on
/// {-N..N}^d.  Plans are created once per config; execution is
/// thread-safe as each call works on its own buffers.
class SpectralTransform {
public:
  explicit SpectralTransform(const DomainConfig& cfg);
  ~SpectralTransform();
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  const DomainConfig& config() const { return config_; }

  /// j-th grid point along one axis, v_j = -pi + 2*pi*j / (2N+1).
  double grid_point(int j) const;
  std::vector<double> grid_axis() const;

  /// Coefficients of the sampled values; size must be (2N+1)^d.
  FourierField to_fourier(std::span<const double> values) const;

  /// Point values of the truncated series.  The input must be Hermitian
  /// to 1e-10; an imaginary residue above 1e-8 raises NonHermitian.
  std::vector<double> from_fourier(const FourierField& field) const;

private:
  DomainConfig config_;
  Lattice lattice_;
  detail::FftPlan* plan_;
};

/// One-shot conveniences (build a transform, run, drop it).
FourierField to_fourier(const DomainConfig& cfg, std::span<const double> values);
std::vector<double> from_fourier(const FourierField& field);

} // namespace csb
