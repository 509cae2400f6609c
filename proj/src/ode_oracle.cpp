#include "se2sr/ode_oracle.hpp"

#include <cmath>

namespace se2sr {

namespace {

void check_resolution(double t, long steps) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::domain_error("se2sr: integration time must be finite and >= 0");
  }
  if (steps < 1 || static_cast<double>(steps) < 1000.0 * t) {
    throw std::invalid_argument(
        "se2sr: integrator resolution too coarse, need steps >= 1000 t");
  }
}

struct deriv5 {
  double dg, dc, dx, dy, dth;
};

inline deriv5 rhs(double gamma, double c, double theta) {
  double sh, chh, sth, cth;
  ::sincos(0.5 * gamma, &sh, &chh);
  ::sincos(theta, &sth, &cth);
  // sin gamma = 2 sin(gamma/2) cos(gamma/2)
  return {c, -2.0 * sh * chh, sh * cth, sh * sth, -chh};
}

}  // namespace

full_state integrate(covector lambda0, double t, long steps) {
  check_resolution(t, steps);
  const double h = t / static_cast<double>(steps);
  full_state s{lambda0.gamma, lambda0.c, 0.0, 0.0, 0.0};
  for (long i = 0; i < steps; ++i) {
    const deriv5 k1 = rhs(s.gamma, s.c, s.theta);
    const deriv5 k2 = rhs(s.gamma + 0.5 * h * k1.dg, s.c + 0.5 * h * k1.dc,
                          s.theta + 0.5 * h * k1.dth);
    const deriv5 k3 = rhs(s.gamma + 0.5 * h * k2.dg, s.c + 0.5 * h * k2.dc,
                          s.theta + 0.5 * h * k2.dth);
    const deriv5 k4 =
        rhs(s.gamma + h * k3.dg, s.c + h * k3.dc, s.theta + h * k3.dth);
    s.gamma += h / 6.0 * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg);
    s.c += h / 6.0 * (k1.dc + 2.0 * k2.dc + 2.0 * k3.dc + k4.dc);
    s.x += h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    s.y += h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    s.theta += h / 6.0 * (k1.dth + 2.0 * k2.dth + 2.0 * k3.dth + k4.dth);
  }
  return s;
}

covector pendulum_integrate(covector lambda0, double t, long steps) {
  check_resolution(t, steps);
  const double h = t / static_cast<double>(steps);
  double g = lambda0.gamma;
  double c = lambda0.c;
  for (long i = 0; i < steps; ++i) {
    const double g1 = c, c1 = -std::sin(g);
    const double g2 = c + 0.5 * h * c1, c2 = -std::sin(g + 0.5 * h * g1);
    const double g3 = c + 0.5 * h * c2, c3 = -std::sin(g + 0.5 * h * g2);
    const double g4 = c + h * c3, c4 = -std::sin(g + h * g3);
    g += h / 6.0 * (g1 + 2.0 * g2 + 2.0 * g3 + g4);
    c += h / 6.0 * (c1 + 2.0 * c2 + 2.0 * c3 + c4);
  }
  return {g, c};
}

}  // namespace se2sr
