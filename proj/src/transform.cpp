#include "csb/transform.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "csb/errors.hpp"

namespace csb {

namespace detail {

// FFTW's planner is not reentrant; executions on distinct arrays are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftPlan {
  fftw_plan forward = nullptr;  // exp(-i ...)
  fftw_plan backward = nullptr; // exp(+i ...)
  std::size_t total = 0;

  FftPlan(int dim, int n) {
    total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
    fftw_complex* buf = fftw_alloc_complex(total);
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      if (dim == 2) {
        forward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
      } else {
        forward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
      }
    }
    fftw_free(buf);
  }

  ~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

struct FftwBuffer {
  fftw_complex* ptr = nullptr;
  explicit FftwBuffer(std::size_t count) : ptr(fftw_alloc_complex(count)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

} // namespace detail

SpectralTransform::SpectralTransform(const DomainConfig& cfg)
    : config_(cfg), lattice_(Lattice::of(cfg)),
      plan_(new detail::FftPlan(cfg.dim, cfg.points_per_axis())) {}

SpectralTransform::~SpectralTransform() { delete plan_; }

double SpectralTransform::grid_point(int j) const {
  const int n = config_.points_per_axis();
  return -std::numbers::pi + 2.0 * std::numbers::pi * j / n;
}

std::vector<double> SpectralTransform::grid_axis() const {
  const int n = config_.points_per_axis();
  std::vector<double> axis(n);
  for (int j = 0; j < n; ++j) axis[j] = grid_point(j);
  return axis;
}

namespace {

// Parity (-1)^(k_1 + ... + k_d) carried by the shift of the grid origin
// to -pi.
inline double mode_phase(const Mode& k, int dim) {
  long sum = 0;
  for (int a = 0; a < dim; ++a) sum += k[a];
  return (sum & 1L) ? -1.0 : 1.0;
}

} // namespace

FourierField SpectralTransform::to_fourier(std::span<const double> values) const {
  const std::size_t total = lattice_.size();
  if (values.size() != total)
    throw ShapeMismatch("to_fourier: expected " + std::to_string(total) +
                        " grid values, got " + std::to_string(values.size()));

  detail::FftwBuffer buf(total);
  for (std::size_t i = 0; i < total; ++i) {
    buf.ptr[i][0] = values[i];
    buf.ptr[i][1] = 0.0;
  }
  fftw_execute_dft(plan_->forward, buf.ptr, buf.ptr);

  // The grid is indexed j = 0..n-1 per axis; the DFT bin of mode k is
  // k mod n.  Both lattice and DFT layouts are row-major, so a wrapped
  // per-axis remap transposes bins into the {-N..N} layout.
  FourierField out(config_);
  const int n = config_.points_per_axis();
  const double scale = 1.0 / static_cast<double>(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Mode k = lattice_.at(idx);
    std::size_t src = 0;
    for (int a = 0; a < config_.dim; ++a)
      src = src * static_cast<std::size_t>(n) + static_cast<std::size_t>((k[a] + n) % n);
    out[idx] = Complex(buf.ptr[src][0], buf.ptr[src][1]) * (mode_phase(k, config_.dim) * scale);
  }
  return out;
}

std::vector<double> SpectralTransform::from_fourier(const FourierField& field) const {
  if (!field.config().same_domain(config_))
    throw ConfigMismatch("from_fourier: field config does not match transform");
  const std::size_t total = lattice_.size();

  detail::FftwBuffer buf(total);
  for (std::size_t i = 0; i < total; ++i) {
    buf.ptr[i][0] = 0.0;
    buf.ptr[i][1] = 0.0;
  }
  const int n = config_.points_per_axis();
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Mode k = lattice_.at(idx);
    std::size_t dst = 0;
    for (int a = 0; a < config_.dim; ++a)
      dst = dst * static_cast<std::size_t>(n) + static_cast<std::size_t>((k[a] + n) % n);
    const Complex c = field[idx] * mode_phase(k, config_.dim);
    buf.ptr[dst][0] = c.real();
    buf.ptr[dst][1] = c.imag();
  }
  fftw_execute_dft(plan_->backward, buf.ptr, buf.ptr);

  double imag_residue = 0.0;
  std::vector<double> values(total);
  for (std::size_t i = 0; i < total; ++i) {
    values[i] = buf.ptr[i][0];
    imag_residue = std::max(imag_residue, std::abs(buf.ptr[i][1]));
  }
  if (imag_residue > 1e-8)
    throw NonHermitian("from_fourier: imaginary residue " + std::to_string(imag_residue));
  return values;
}

FourierField to_fourier(const DomainConfig& cfg, std::span<const double> values) {
  return SpectralTransform(cfg).to_fourier(values);
}

std::vector<double> from_fourier(const FourierField& field) {
  return SpectralTransform(field.config()).from_fourier(field);
}

} // namespace csb
