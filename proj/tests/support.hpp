#pragma once

// Test-only numerical oracles.  Everything here is deliberately independent
// of the library's elliptic/AGM machinery: plain quadrature and fixed-step
// Runge-Kutta on the defining equations, so the closed forms are checked
// against a second computational route.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace se2sr::testing {

// Adaptive Simpson quadrature with Richardson correction.
inline double adaptive_simpson_impl(const std::function<double(double)>& f,
                                    double a, double b, double fa, double fm,
                                    double fb, double whole, double tol,
                                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, 0.5 * tol,
                               depth - 1) +
         adaptive_simpson_impl(f, m, b, fm, frm, fb, right, 0.5 * tol,
                               depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-14,
                               int max_depth = 48) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_impl(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Classic RK4 with fixed step on an autonomous system y' = f(y).
template <std::size_t N>
std::array<double, N> rk4(const std::function<std::array<double, N>(
                              const std::array<double, N>&)>& f,
                          std::array<double, N> y, double t, long steps) {
  const double h = t / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    const auto k1 = f(y);
    std::array<double, N> tmp;
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
    const auto k2 = f(tmp);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
    const auto k3 = f(tmp);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + h * k3[j];
    const auto k4 = f(tmp);
    for (std::size_t j = 0; j < N; ++j) {
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return y;
}

// sn, cn, dn, and epsilon at (u, k) by integrating the defining system
// sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn, eps' = dn^2 from u = 0.
struct jacobi_ode_values {
  double sn, cn, dn, eps;
};

inline jacobi_ode_values jacobi_by_ode(double u, double k, long steps = 200000) {
  const double k2 = k * k;
  auto rhs = [k2](const std::array<double, 4>& y) -> std::array<double, 4> {
    return {y[1] * y[2], -y[0] * y[2], -k2 * y[0] * y[1], y[2] * y[2]};
  };
  const auto y = rk4<4>(rhs, {0.0, 1.0, 1.0, 0.0}, u, steps);
  return {y[0], y[1], y[2], y[3]};
}

// Pendulum endpoint (gamma, c) by RK4 on gamma' = c, c' = -sin gamma.
inline std::array<double, 2> pendulum_by_ode(double gamma, double c, double t,
                                             long steps = 200000) {
  auto rhs = [](const std::array<double, 2>& y) -> std::array<double, 2> {
    return {y[1], -std::sin(y[0])};
  };
  return rk4<2>(rhs, {gamma, c}, t, steps);
}

// Angular distance on the circle R / (2 pi Z).
inline double circle_dist(double a, double b) {
  const double two_pi = 6.28318530717958647692;
  double d = std::fmod(a - b, two_pi);
  if (d > 0.5 * two_pi) d -= two_pi;
  if (d < -0.5 * two_pi) d += two_pi;
  return std::abs(d);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64{seed};
}

}  // namespace se2sr::testing

#include "se2sr/phase_cylinder.hpp"

namespace se2sr::testing {

// Random covector from the stratum C<which>, kept a margin away from the
// separatrix band so closed forms and charts are exercised in their bulk.
inline covector sample_stratum(int which, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ug(0.0, four_pi);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (;;) {
    const double g = ug(rng);
    switch (which) {
      case 1: {
        const double e = -0.999 + 1.99 * u01(rng);
        const double c2 = 2.0 * (e + std::cos(g));
        if (c2 <= 1e-6) continue;
        const covector l{g, (u01(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(c2)};
        const double ee = energy(l);
        if (ee >= 1.0 - 1e-4 || ee <= -1.0 + 1e-6) continue;
        return l;
      }
      case 2: {
        const double e = 1.001 + 8.0 * u01(rng);
        const double c2 = 2.0 * (e + std::cos(g));
        if (c2 <= 1e-6) continue;
        const covector l{g, (u01(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(c2)};
        if (energy(l) < 1.0 + 1e-4) continue;
        return l;
      }
      case 3: {
        const double ch = std::cos(0.5 * g);
        if (std::abs(ch) < 1e-3) continue;
        return {g, (u01(rng) < 0.5 ? -1.0 : 1.0) * 2.0 * std::abs(ch)};
      }
      case 4:
        return {u01(rng) < 0.5 ? 0.0 : two_pi, 0.0};
      default:
        return {u01(rng) < 0.5 ? pi_v : 3.0 * pi_v, 0.0};
    }
  }
}

// C1 covector with prescribed chart values (s1 = +1 component).
inline covector c1_point(double phi, double k) {
  return from_elliptic({stratum_id::c1, phi, modulus(k), +1, +1});
}

// C2 covector with prescribed psi = phi/k and rotation direction.
inline covector c2_point(double psi, double k, int s2) {
  return from_elliptic({stratum_id::c2, k * psi, modulus(k), +1, s2});
}

}  // namespace se2sr::testing
