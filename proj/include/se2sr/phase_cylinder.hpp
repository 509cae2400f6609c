#pragma once

#include <stdexcept>

#include "se2sr/elliptic.hpp"

namespace se2sr {

inline constexpr double pi_v = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi_v;
inline constexpr double four_pi = 4.0 * pi_v;

// Thrown when an operation receives a covector from a stratum it does not
// handle (e.g. asking for elliptic coordinates at an equilibrium).
class stratum_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Point of the pendulum phase cylinder: angle gamma on R/(4 pi Z) and
// angular velocity c.  gamma is stored unwrapped; reduce on comparison.
struct covector {
  double gamma;
  double c;
};

// gamma reduced into [0, 4 pi).
double reduce_gamma(double gamma);

// angle reduced into (-pi, pi].
double reduce_angle(double angle);

// Pendulum energy E = c^2/2 - cos gamma, always >= -1.
double energy(covector lambda);

enum class stratum_id { c1, c2, c3, c4, c5 };

// Stratum with its connected-component tags: index i in {0, 1} distinguishes
// the two components of C1, C3, C4, C5 (sign of cos(gamma/2), resp. position
// of the equilibrium); sign is sgn c on C2 and C3.  Unused tags are 0.
struct stratum {
  stratum_id id;
  int index;
  int sign;
};

// Energy-band classification with tolerance tol on |E -+ 1| and |c|.
stratum classify(covector lambda, double tol = 1e-10);

// Elliptic coordinates (phi, k) rectifying the pendulum flow on
// C1 u C2 u C3.  phi is the time along the flow (phi' = 1); on the C2 chart
// the natural Jacobi argument is psi = phi/k.  k == 1 on the C3 chart.
// s1 = sgn cos(gamma/2), s2 = sgn c where the chart uses them; +1 otherwise.
struct elliptic_coords {
  stratum_id chart;
  double phi;
  modulus k;
  int s1;
  int s2;

  double psi() const { return phi / k.k(); }
};

// Chart map.  Throws stratum_error on C4/C5 and near_separatrix_error when
// the energy is too close to the critical level for the elliptic chart.
elliptic_coords to_elliptic(covector lambda);

// Inverse chart map; gamma of the result is reduced into [0, 4 pi).
// Throws std::invalid_argument when the coordinate invariants are violated.
covector from_elliptic(const elliptic_coords& ec);

// Pendulum flow for time t: phi -> phi + t in the charts, identity on the
// equilibria C4/C5.
covector pendulum_flow(covector lambda, double t);

}  // namespace se2sr
