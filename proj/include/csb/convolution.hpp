#pragma once

#include <memory>

#include "csb/fourier_field.hpp"

namespace csb {

namespace detail {
struct PadPlan;
struct PadBuffers;
}

/// Exact truncated convolution on the mode lattice,
///
///   (g * h)_k = sum_{l+m=k, |l|,|m| <= N} g_l h_m,   |k| <= N,
///
/// computed by zero-padding both spectra to the smallest power of two
/// >= 4N+1 per axis, so the quadratic product is alias-free.  Results
/// are bit-for-bit deterministic for fixed inputs.
class ConvolutionEngine {
public:
  explicit ConvolutionEngine(const DomainConfig& cfg);
  ~ConvolutionEngine();
  ConvolutionEngine(const ConvolutionEngine&) = delete;
  ConvolutionEngine& operator=(const ConvolutionEngine&) = delete;

  const DomainConfig& config() const { return config_; }
  int padded_size() const { return npad_; }

  /// Scratch arrays sized for this engine.  One per concurrent caller;
  /// the engine itself is shareable read-only.
  class Workspace {
  public:
    explicit Workspace(const ConvolutionEngine& engine);
    ~Workspace();
    Workspace(Workspace&&) noexcept;
    Workspace(const Workspace&) = delete;
    Workspace& operator=(const Workspace&) = delete;

  private:
    friend class ConvolutionEngine;
    detail::PadBuffers* buffers_;
  };

  Workspace make_workspace() const { return Workspace(*this); }

  /// out_k = sum_{l+m=k} (wa_l g_l)(wb_m h_m); wa/wb may be null for
  /// unweighted factors.  g, h, out are lattice-flat coefficient arrays.
  void convolve_scaled(const double* wa, const Complex* g,
                       const double* wb, const Complex* h,
                       Complex* out, Workspace& ws) const;

  FourierField truncated_convolution(const FourierField& g, const FourierField& h) const;

private:
  DomainConfig config_;
  Lattice lattice_;
  int npad_;
  std::size_t pad_total_;
  detail::PadPlan* plan_;

  void scatter(const double* w, const Complex* src, void* dst) const;
};

/// One-shot convenience used by tests and small callers.
FourierField truncated_convolution(const FourierField& g, const FourierField& h);

} // namespace csb
