#include "csb/convolution.hpp"

#include <cstring>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "csb/errors.hpp"

namespace csb {

namespace detail {

std::mutex& planner_mutex(); // defined in transform.cpp

struct PadPlan {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  PadPlan(int dim, int npad, std::size_t total) {
    fftw_complex* buf = fftw_alloc_complex(total);
    {
      std::lock_guard<std::mutex> lock(planner_mutex());
      if (dim == 2) {
        forward = fftw_plan_dft_2d(npad, npad, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_2d(npad, npad, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
      } else {
        forward = fftw_plan_dft_3d(npad, npad, npad, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        backward = fftw_plan_dft_3d(npad, npad, npad, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
      }
    }
    fftw_free(buf);
  }

  ~PadPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

struct PadBuffers {
  fftw_complex* a = nullptr;
  fftw_complex* b = nullptr;
  std::size_t total = 0;

  explicit PadBuffers(std::size_t n) : total(n) {
    a = fftw_alloc_complex(n);
    b = fftw_alloc_complex(n);
  }
  ~PadBuffers() {
    fftw_free(a);
    fftw_free(b);
  }
};

} // namespace detail

namespace {

int next_pow2_at_least(int m) {
  int p = 1;
  while (p < m) p *= 2;
  return p;
}

} // namespace

ConvolutionEngine::ConvolutionEngine(const DomainConfig& cfg)
    : config_(cfg), lattice_(Lattice::of(cfg)),
      npad_(next_pow2_at_least(4 * cfg.max_mode + 1)) {
  pad_total_ = 1;
  for (int a = 0; a < cfg.dim; ++a) pad_total_ *= static_cast<std::size_t>(npad_);
  plan_ = new detail::PadPlan(cfg.dim, npad_, pad_total_);
}

ConvolutionEngine::~ConvolutionEngine() { delete plan_; }

ConvolutionEngine::Workspace::Workspace(const ConvolutionEngine& engine)
    : buffers_(new detail::PadBuffers(engine.pad_total_)) {}

ConvolutionEngine::Workspace::~Workspace() { delete buffers_; }

ConvolutionEngine::Workspace::Workspace(Workspace&& other) noexcept
    : buffers_(other.buffers_) {
  other.buffers_ = nullptr;
}

void ConvolutionEngine::scatter(const double* w, const Complex* src, void* dst_raw) const {
  fftw_complex* dst = static_cast<fftw_complex*>(dst_raw);
  std::memset(dst, 0, pad_total_ * sizeof(fftw_complex));
  const int N = config_.max_mode;
  const int np = npad_;
  auto wrap = [np](int k) { return static_cast<std::size_t>((k + np) % np); };

  std::size_t idx = 0;
  if (config_.dim == 2) {
    for (int k0 = -N; k0 <= N; ++k0) {
      const std::size_t row = wrap(k0) * static_cast<std::size_t>(np);
      for (int k1 = -N; k1 <= N; ++k1, ++idx) {
        const Complex c = w ? w[idx] * src[idx] : src[idx];
        const std::size_t dstIdx = row + wrap(k1);
        dst[dstIdx][0] = c.real();
        dst[dstIdx][1] = c.imag();
      }
    }
  } else {
    for (int k0 = -N; k0 <= N; ++k0) {
      const std::size_t plane = wrap(k0) * static_cast<std::size_t>(np) * static_cast<std::size_t>(np);
      for (int k1 = -N; k1 <= N; ++k1) {
        const std::size_t row = plane + wrap(k1) * static_cast<std::size_t>(np);
        for (int k2 = -N; k2 <= N; ++k2, ++idx) {
          const Complex c = w ? w[idx] * src[idx] : src[idx];
          const std::size_t dstIdx = row + wrap(k2);
          dst[dstIdx][0] = c.real();
          dst[dstIdx][1] = c.imag();
        }
      }
    }
  }
}

void ConvolutionEngine::convolve_scaled(const double* wa, const Complex* g,
                                        const double* wb, const Complex* h,
                                        Complex* out, Workspace& ws) const {
  fftw_complex* A = ws.buffers_->a;
  fftw_complex* B = ws.buffers_->b;

  scatter(wa, g, A);
  scatter(wb, h, B);
  fftw_execute_dft(plan_->backward, A, A);
  fftw_execute_dft(plan_->backward, B, B);

  for (std::size_t i = 0; i < pad_total_; ++i) {
    const double re = A[i][0] * B[i][0] - A[i][1] * B[i][1];
    const double im = A[i][0] * B[i][1] + A[i][1] * B[i][0];
    A[i][0] = re;
    A[i][1] = im;
  }
  fftw_execute_dft(plan_->forward, A, A);

  const double scale = 1.0 / static_cast<double>(pad_total_);
  const int N = config_.max_mode;
  const int np = npad_;
  auto wrap = [np](int k) { return static_cast<std::size_t>((k + np) % np); };

  std::size_t idx = 0;
  if (config_.dim == 2) {
    for (int k0 = -N; k0 <= N; ++k0) {
      const std::size_t row = wrap(k0) * static_cast<std::size_t>(np);
      for (int k1 = -N; k1 <= N; ++k1, ++idx) {
        const std::size_t srcIdx = row + wrap(k1);
        out[idx] = Complex(A[srcIdx][0], A[srcIdx][1]) * scale;
      }
    }
  } else {
    for (int k0 = -N; k0 <= N; ++k0) {
      const std::size_t plane = wrap(k0) * static_cast<std::size_t>(np) * static_cast<std::size_t>(np);
      for (int k1 = -N; k1 <= N; ++k1) {
        const std::size_t row = plane + wrap(k1) * static_cast<std::size_t>(np);
        for (int k2 = -N; k2 <= N; ++k2, ++idx) {
          const std::size_t srcIdx = row + wrap(k2);
          out[idx] = Complex(A[srcIdx][0], A[srcIdx][1]) * scale;
        }
      }
    }
  }
}

FourierField ConvolutionEngine::truncated_convolution(const FourierField& g,
                                                      const FourierField& h) const {
  if (!g.config().same_domain(config_) || !h.config().same_domain(config_))
    throw ShapeMismatch("truncated_convolution: fields on different domains");
  FourierField out(config_);
  Workspace ws(*this);
  convolve_scaled(nullptr, g.data(), nullptr, h.data(), out.data(), ws);
  return out;
}

FourierField truncated_convolution(const FourierField& g, const FourierField& h) {
  if (!g.config().same_domain(h.config()))
    throw ShapeMismatch("truncated_convolution: fields on different domains");
  ConvolutionEngine engine(g.config());
  return engine.truncated_convolution(g, h);
}

} // namespace csb
