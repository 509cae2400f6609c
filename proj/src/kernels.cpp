#include "se2sr/kernels.hpp"

#include <cmath>
#include <exception>

#include "se2sr/maxwell.hpp"
#include "se2sr/ode_oracle.hpp"

namespace se2sr::kernels {

namespace {

// Runs body(i) for i in [0, n), serially or under OpenMP.  An exception
// thrown by any element is captured and rethrown after the loop joins,
// since exceptions must not escape a parallel region.
template <typename Body>
void for_each_index(long n, exec policy, Body&& body) {
  if (policy == exec::serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

std::vector<pose> exp_map_batch(std::span<const extended_covector> nus,
                                exec policy) {
  std::vector<pose> out(nus.size());
  for_each_index(static_cast<long>(nus.size()), policy,
                 [&](long i) { out[i] = exp_map(nus[i]); });
  return out;
}

std::vector<geodesic_sample> trace_samples(const extended_covector& nu,
                                           int n_samples, exec policy) {
  if (n_samples < 2) {
    throw std::invalid_argument("se2sr: trace needs at least 2 samples");
  }
  if (!(nu.t > 0.0) || !std::isfinite(nu.t)) {
    throw std::invalid_argument("se2sr: trace requires t > 0");
  }
  const geodesic_evaluator ev(nu.lambda);
  std::vector<geodesic_sample> out(n_samples);
  const double h = nu.t / static_cast<double>(n_samples - 1);
  for_each_index(n_samples, policy, [&](long j) {
    const double s = (j == n_samples - 1) ? nu.t : h * static_cast<double>(j);
    out[j] = ev.sample_at(s);
  });
  return out;
}

std::vector<double> p11_grid(std::span<const double> ks, exec policy) {
  std::vector<double> out(ks.size());
  for_each_index(static_cast<long>(ks.size()), policy,
                 [&](long i) { out[i] = p1_root(1, modulus(ks[i])); });
  return out;
}

std::vector<double> tt_curve(std::span<const double> energies, exec policy) {
  std::vector<double> out(energies.size());
  for_each_index(static_cast<long>(energies.size()), policy,
                 [&](long i) { out[i] = tt_of_energy(energies[i]); });
  return out;
}

std::vector<double> oracle_gap(std::span<const extended_covector> nus,
                               long steps_per_unit, exec policy) {
  std::vector<double> out(nus.size());
  for_each_index(static_cast<long>(nus.size()), policy, [&](long i) {
    const extended_covector& nu = nus[i];
    const long steps = std::max<long>(
        1000, static_cast<long>(std::ceil(nu.t * static_cast<double>(
                                              steps_per_unit))));
    const full_state fs = integrate(nu.lambda, nu.t, steps);
    out[i] = pose_distance(exp_map(nu), pose{fs.x, fs.y, fs.theta});
  });
  return out;
}

}  // namespace se2sr::kernels
