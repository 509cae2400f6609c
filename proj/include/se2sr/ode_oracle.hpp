#pragma once

#include "se2sr/phase_cylinder.hpp"

namespace se2sr {

// State of the full normal system: pendulum (gamma, c) plus the frame
// coordinates (x, y, theta).  gamma and theta are kept unwrapped.
struct full_state {
  double gamma;
  double c;
  double x;
  double y;
  double theta;
};

// Fixed-step classical RK4 on the full system
//   gamma' = c, c' = -sin gamma,
//   x' = sin(gamma/2) cos theta, y' = sin(gamma/2) sin theta,
//   theta' = -cos(gamma/2),
// from (gamma0, c0, 0, 0, 0).  Used only as an independent cross-check of
// the closed forms; fixed step keeps the values reproducible.
// Requires steps >= 1000 * t.
full_state integrate(covector lambda0, double t, long steps);

// Same integrator restricted to the pendulum alone.
covector pendulum_integrate(covector lambda0, double t, long steps);

}  // namespace se2sr
