#include "csb/decomposition.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "csb/errors.hpp"

namespace csb {

namespace {

void check_kernel_dim(const DomainConfig& config, const KernelModel& kernel) {
  if (kernel.dim() != config.dim)
    throw ConfigMismatch("kernel dimension " + std::to_string(kernel.dim()) +
                         " does not match domain dimension " + std::to_string(config.dim));
}

void run_over_terms(std::size_t count, int threads,
                    const std::function<void(std::size_t)>& work) {
  if (threads <= 1) {
    for (std::size_t p = 0; p < count; ++p) work(p);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(threads, count));
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      for (std::size_t p = static_cast<std::size_t>(w); p < count; p += workers) work(p);
    }));
  }
  for (auto& f : futures) f.get();
}

void fill_loss_diagonal(Decomposition& dec) {
  const std::size_t modes = dec.mode_count();
  for (std::size_t i = 0; i < modes; ++i) {
    double acc = 0.0;
    for (std::size_t p = 0; p < dec.term_count; ++p)
      acc += dec.weights[p] * dec.alpha[p * modes + i] * dec.alpha_prime[p * modes + i];
    dec.loss_diagonal[i] = acc;
  }
}

} // namespace

Decomposition decompose_2d(const DomainConfig& config, const KernelModel& kernel_in,
                           int directions, const DecompositionOptions& opts) {
  if (config.dim != 2) throw ConfigMismatch("decompose_2d needs a 2D domain");
  check_kernel_dim(config, kernel_in);
  if (directions < 1) throw Error("need at least one direction");

  const KernelModel kernel =
      opts.symmetric_half ? kernel_in.symmetric_split() : kernel_in;

  const int M = directions;
  const double R = config.truncation_radius;
  const RadialTransform radial(2, R, opts.quadrature_order);
  const Lattice lattice = Lattice::of(config);
  const std::size_t modes = lattice.size();

  Decomposition dec;
  dec.config = config;
  dec.directions_per_coord = M;
  dec.term_count = static_cast<std::size_t>(M);
  dec.symmetric_half = opts.symmetric_half;
  dec.jacobian_included = false;
  dec.weights.assign(dec.term_count, std::numbers::pi / M);
  dec.directions.resize(dec.term_count);
  dec.alpha.resize(dec.term_count * modes);
  dec.alpha_prime.resize(dec.term_count * modes);
  dec.loss_diagonal.resize(modes);

  // Angles cover [0, pi) -- or [0, pi/2) with doubled weight in the
  // symmetric case, where total weight per direction stays pi/M.
  const double arc = opts.symmetric_half ? 0.5 * std::numbers::pi : std::numbers::pi;

  run_over_terms(dec.term_count, opts.threads, [&](std::size_t p) {
    const double theta = arc * static_cast<double>(p) / M;
    const double ex = std::cos(theta);
    const double ey = std::sin(theta);
    dec.directions[p] = {ex, ey, 0.0};
    double* row_a = dec.alpha.data() + p * modes;
    double* row_b = dec.alpha_prime.data() + p * modes;
    const int N = config.max_mode;
    std::size_t idx = 0;
    for (int k0 = -N; k0 <= N; ++k0) {
      for (int k1 = -N; k1 <= N; ++k1, ++idx) {
        const double dot = k0 * ex + k1 * ey;        // l . e_theta
        const double dot_perp = -k0 * ey + k1 * ex;  // l . e_(theta+pi/2)
        row_a[idx] = radial.phi_a(kernel, dot);
        row_b[idx] = radial.phi_b(kernel, dot_perp);
      }
    }
  });

  fill_loss_diagonal(dec);
  return dec;
}

Decomposition decompose_3d(const DomainConfig& config, const KernelModel& kernel,
                           int directions, const DecompositionOptions& opts) {
  if (config.dim != 3) throw ConfigMismatch("decompose_3d needs a 3D domain");
  check_kernel_dim(config, kernel);
  if (directions < 1) throw Error("need at least one direction");
  if (opts.symmetric_half)
    throw SymmetricFlagInvalid("the half-interval rule is a 2D option");

  const int M = directions;
  const double R = config.truncation_radius;
  const RadialTransform radial(3, R, opts.quadrature_order);
  const Lattice lattice = Lattice::of(config);
  const std::size_t modes = lattice.size();

  Decomposition dec;
  dec.config = config;
  dec.directions_per_coord = M;
  dec.term_count = static_cast<std::size_t>(M) * static_cast<std::size_t>(M);
  dec.symmetric_half = false;
  dec.jacobian_included = opts.jacobian_included;
  dec.weights.resize(dec.term_count);
  dec.directions.resize(dec.term_count);
  dec.alpha.resize(dec.term_count * modes);
  dec.alpha_prime.resize(dec.term_count * modes);
  dec.loss_diagonal.resize(modes);

  const double base_weight = std::numbers::pi * std::numbers::pi / (static_cast<double>(M) * M);

  // Term order: ascending p (theta), then q (phi).
  run_over_terms(dec.term_count, opts.threads, [&](std::size_t t) {
    const int p = static_cast<int>(t) / M;
    const int q = static_cast<int>(t) % M;
    const double theta = std::numbers::pi * static_cast<double>(p) / M;
    const double phi_ang = std::numbers::pi * static_cast<double>(q) / M;
    const double st = std::sin(theta);
    const double e0 = st * std::cos(phi_ang);
    const double e1 = st * std::sin(phi_ang);
    const double e2 = std::cos(theta);
    dec.directions[t] = {e0, e1, e2};
    dec.weights[t] = opts.jacobian_included ? base_weight * st : base_weight;

    double* row_a = dec.alpha.data() + t * modes;
    double* row_b = dec.alpha_prime.data() + t * modes;
    const int N = config.max_mode;
    std::size_t idx = 0;
    for (int k0 = -N; k0 <= N; ++k0) {
      for (int k1 = -N; k1 <= N; ++k1) {
        for (int k2 = -N; k2 <= N; ++k2, ++idx) {
          const double dot = k0 * e0 + k1 * e1 + k2 * e2;
          row_a[idx] = radial.phi_a(kernel, dot);
          // |m - (m.e)e|, the part of m orthogonal to e
          const double p0 = k0 - dot * e0;
          const double p1 = k1 - dot * e1;
          const double p2 = k2 - dot * e2;
          const double proj = std::sqrt(p0 * p0 + p1 * p1 + p2 * p2);
          row_b[idx] = radial.psi_b(kernel, proj);
        }
      }
    }
  });

  fill_loss_diagonal(dec);
  return dec;
}

Decomposition decompose(const DomainConfig& config, const KernelModel& kernel,
                        int directions, const DecompositionOptions& opts) {
  return config.dim == 2 ? decompose_2d(config, kernel, directions, opts)
                         : decompose_3d(config, kernel, directions, opts);
}

double reconstruct_beta(const Decomposition& dec, const Mode& l, const Mode& m) {
  const Lattice lattice = Lattice::of(dec.config);
  if (!lattice.contains(l) || !lattice.contains(m))
    throw IndexOutOfRange("reconstruct_beta: mode outside {-N..N}^d");
  const std::size_t il = lattice.flat(l);
  const std::size_t im = lattice.flat(m);
  const std::size_t modes = dec.mode_count();
  double acc = 0.0;
  for (std::size_t p = 0; p < dec.term_count; ++p)
    acc += dec.weights[p] * dec.alpha[p * modes + il] * dec.alpha_prime[p * modes + im];
  return acc;
}

double beta_oracle_2d(const DomainConfig& config, const KernelModel& kernel,
                      const Mode& l, const Mode& m, double tol,
                      int quadrature_order) {
  if (config.dim != 2) throw ConfigMismatch("beta_oracle_2d needs a 2D domain");
  check_kernel_dim(config, kernel);
  const Lattice lattice = Lattice::of(config);
  if (!lattice.contains(l) || !lattice.contains(m))
    throw IndexOutOfRange("beta_oracle_2d: mode outside {-N..N}^d");

  const RadialTransform radial(2, config.truncation_radius, quadrature_order);
  auto integrand = [&](double theta) {
    const double ex = std::cos(theta);
    const double ey = std::sin(theta);
    const double dot_l = l[0] * ex + l[1] * ey;
    const double dot_m = -m[0] * ey + m[1] * ex;
    return radial.phi_a(kernel, dot_l) * radial.phi_b(kernel, dot_m);
  };
  return adaptive_gauss_kronrod(integrand, 0.0, std::numbers::pi, tol);
}

} // namespace csb
