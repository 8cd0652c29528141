#pragma once

#include <complex>
#include <vector>

#include "csb/config.hpp"
#include "csb/lattice.hpp"

namespace csb {

using Complex = std::complex<double>;

/// Fourier coefficients of a distribution on the periodic velocity box,
/// indexed over the full symmetric mode lattice {-N..N}^d.
class FourierField {
public:
  FourierField() = default;
  explicit FourierField(const DomainConfig& cfg)
      : config_(cfg), lattice_(Lattice::of(cfg)), coeffs_(lattice_.size()) {}

  const DomainConfig& config() const { return config_; }
  const Lattice& lattice() const { return lattice_; }

  Complex& operator[](std::size_t idx) { return coeffs_[idx]; }
  const Complex& operator[](std::size_t idx) const { return coeffs_[idx]; }
  Complex& at(const Mode& k) { return coeffs_[lattice_.flat(k)]; }
  const Complex& at(const Mode& k) const { return coeffs_[lattice_.flat(k)]; }

  Complex* data() { return coeffs_.data(); }
  const Complex* data() const { return coeffs_.data(); }
  std::size_t size() const { return coeffs_.size(); }

  std::vector<Complex>& coeffs() { return coeffs_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// max_k |f_k - conj(f_{-k})|
  double hermitian_residual() const;

  /// Replaces f_k by (f_k + conj(f_{-k})) / 2.
  void symmetrize();

  double max_abs() const;

private:
  DomainConfig config_;
  Lattice lattice_{2, 0, 1};
  std::vector<Complex> coeffs_;
};

/// y += a * x, elementwise over coefficients.  Fields must share a domain.
void axpy(Complex a, const FourierField& x, FourierField& y);

} // namespace csb
