#pragma once

#include <functional>
#include <vector>

namespace csb {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Nodes by Newton iteration on the Legendre polynomial; cached per order.
  static const GaussLegendre& of_order(int order);

  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

/// Composite Gauss-Legendre over explicit panel boundaries
/// (ascending; integrates each [b_i, b_i+1] with the given order).
double composite_gl(const std::function<double(double)>& f,
                    const std::vector<double>& boundaries, int order);

/// Adaptive Gauss-Kronrod 7-15 bisection to absolute tolerance.
/// Throws QuadratureNoConvergence when the interval budget runs out.
double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_intervals = 1 << 16);

} // namespace csb
