#include "csb/fourier_field.hpp"

#include <algorithm>
#include <cmath>

#include "csb/errors.hpp"

namespace csb {

double FourierField::hermitian_residual() const {
  double worst = 0.0;
  const std::size_t total = coeffs_.size();
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t j = total - 1 - i; // flat index of -k
    worst = std::max(worst, std::abs(coeffs_[i] - std::conj(coeffs_[j])));
  }
  return worst;
}

void FourierField::symmetrize() {
  const std::size_t total = coeffs_.size();
  for (std::size_t i = 0; i <= total - 1 - i; ++i) {
    const std::size_t j = total - 1 - i;
    const Complex avg = 0.5 * (coeffs_[i] + std::conj(coeffs_[j]));
    coeffs_[i] = avg;
    coeffs_[j] = std::conj(avg);
  }
}

double FourierField::max_abs() const {
  double worst = 0.0;
  for (const Complex& c : coeffs_) worst = std::max(worst, std::abs(c));
  return worst;
}

void axpy(Complex a, const FourierField& x, FourierField& y) {
  if (!x.config().same_domain(y.config()))
    throw ConfigMismatch("axpy: fields on different domains");
  const std::size_t total = x.size();
  for (std::size_t i = 0; i < total; ++i) y[i] += a * x[i];
}

} // namespace csb
