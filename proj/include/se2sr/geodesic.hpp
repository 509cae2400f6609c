#pragma once

#include <vector>

#include "se2sr/phase_cylinder.hpp"

namespace se2sr {

// Group element (x, y, theta) of SE(2); theta lives on the circle and is
// compared mod 2 pi.
struct pose {
  double x;
  double y;
  double theta;
};

// Argument of the exponential map: initial covector plus a positive time.
struct extended_covector {
  covector lambda;
  double t;
};

struct geodesic_sample {
  double s;
  pose q;
  double gamma;
  double c;
  double curvature;  // -cot(gamma/2); +-inf at cusps
  bool cusp;
};

// The closed forms of the endpoint expressed in the half-sum variables
// p, tau (p = t/2, tau = phi + p on C1; p = t/(2k), tau = psi + p on C2).
// The half-angle pair uses the principal branch theta in (-pi, pi], so r1
// and r2 are directly comparable with r1_of_pose / r2_of_pose.
struct endpoint_functions {
  double sin_theta;
  double cos_half_theta;
  double sin_half_theta;
  double r1;
  double r2;
  double p;
  double tau;
};

inline constexpr double cusp_tolerance = 1e-9;
// |E - 1| band routed to the k = 1 hyperbolic formulas.
inline constexpr double separatrix_dispatch_band = 1e-6;

// -cot(gamma/2), with the cusp limit returned as a signed infinity.
double curvature_of_gamma(double gamma);

// Evaluator for one geodesic: fixes the covector's chart once, then maps any
// arclength s to the pose (and phase) at s.  Pure and safe to share across
// threads.
class geodesic_evaluator {
 public:
  explicit geodesic_evaluator(covector lambda);

  pose pose_at(double s) const;
  geodesic_sample sample_at(double s) const;

  // The formula branch actually used, after near-separatrix dispatch.
  stratum_id branch() const { return branch_; }

 private:
  stratum_id branch_;
  double k_ = 0.0;     // modulus on C1/C2
  double base_ = 0.0;  // phi (C1, C3) or psi (C2)
  int s1_ = 1;
  int s2_ = 1;
  // chart values at the base argument
  double sn0_ = 0.0, cn0_ = 0.0, dn0_ = 0.0, eps0_ = 0.0;
  double th0_ = 0.0, sech0_ = 0.0;
  double gamma0_ = 0.0;
  int dir_ = 1;  // spin sign on C4, travel direction on C5
};

// Endpoint of the geodesic with initial covector lambda at time t.
pose exp_map(const extended_covector& nu);

// n_samples >= 2 uniformly spaced samples on [0, t]; sample 0 is the
// identity pose, the last sample is exp_map(nu).
std::vector<geodesic_sample> trace(const extended_covector& nu, int n_samples);

// The (p, tau) closed forms of the endpoint; C1 and C2 only.
endpoint_functions closed_form_endpoint_functions(const extended_covector& nu);

// R1 = y cos(theta/2) - x sin(theta/2) and R2 = x cos(theta/2) + y
// sin(theta/2) on the principal branch theta in (-pi, pi].  Their zero sets
// carry the multiple points of the exponential map.
double r1_of_pose(const pose& q);
double r2_of_pose(const pose& q);

// max(|dx|, |dy|, circle distance of theta).
double pose_distance(const pose& a, const pose& b);

}  // namespace se2sr
