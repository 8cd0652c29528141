#include "csb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "csb/errors.hpp"

namespace csb {

namespace {

GaussLegendre compute_gl(int order) {
  GaussLegendre rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

} // namespace

const GaussLegendre& GaussLegendre::of_order(int order) {
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
  return it->second;
}

double composite_gl(const std::function<double(double)>& f,
                    const std::vector<double>& boundaries, int order) {
  const GaussLegendre& rule = GaussLegendre::of_order(order);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
    total += rule.integrate(f, boundaries[i], boundaries[i + 1]);
  return total;
}

namespace {

// Kronrod 15 nodes/weights with the embedded Gauss 7 rule (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
  double integral;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(mid - half * kKronrodNodes[i]);
    fv[14 - i] = f(mid + half * kKronrodNodes[i]);
  }
  fv[7] = f(mid);

  double kron = kKronrodWeights[7] * fv[7];
  for (int i = 0; i < 7; ++i) kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
  kron *= half;

  double gauss = kGaussWeights[3] * fv[7];
  for (int i = 0; i < 3; ++i) gauss += kGaussWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  gauss *= half;

  return GkResult{kron, std::abs(kron - gauss)};
}

struct Segment {
  double a, b, integral, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

} // namespace

double adaptive_gauss_kronrod(const std::function<double(double)>& f,
                              double a, double b, double abs_tol,
                              int max_intervals) {
  GkResult whole = gk15(f, a, b);
  std::priority_queue<Segment> queue;
  queue.push(Segment{a, b, whole.integral, whole.error});
  double total = whole.integral;
  double total_error = whole.error;
  int used = 1;

  while (total_error > abs_tol) {
    if (used >= max_intervals)
      throw QuadratureNoConvergence(
          "adaptive quadrature: tolerance " + std::to_string(abs_tol) +
          " unreachable within " + std::to_string(max_intervals) + " intervals");
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    GkResult left = gk15(f, worst.a, mid);
    GkResult right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_error += left.error + right.error - worst.error;
    queue.push(Segment{worst.a, mid, left.integral, left.error});
    queue.push(Segment{mid, worst.b, right.integral, right.error});
    ++used;
  }
  return total;
}

} // namespace csb
