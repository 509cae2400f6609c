#pragma once

#include <optional>
#include <vector>

#include "se2sr/geodesic.hpp"

namespace se2sr {

// f1(p, k) = cn p (E(p) - p) - dn p sn p.  Odd in p; its positive roots
// p_1^n(k) carry the multiple points of the exponential map over C2.
double f1(double p, modulus k);

// f2(p, k) = k^2 cn p sn p - dn p (p - E(p)).  Odd in p and positive for
// p > 0, 0 < k < 1.
double f2(double p, modulus k);

// n-th positive root of f1, the unique zero in (2Kn - K, 2Kn].  Located by
// a bracketed Newton iteration on g1 = f1/cn (g1' = -dn^2/cn^2 < 0);
// resolved to ~1e-13 of a period.  p_1^n(0) = pi n.
double p1_root(int n, modulus k);

// Sampled first-root curve k |-> p_1^1(k); used for figure data and as a
// seed cache for cut-time sweeps.
struct root_table {
  std::vector<double> k_grid;
  std::vector<double> p11;

  // Chebyshev-spaced nodes on [k_min, k_max], ascending.
  static root_table build(int points, double k_min, double k_max);
};

// Which Maxwell conditions hold at nu, with the witnessing half-sum
// variables.  `boundary` marks verdicts whose companion inequality
// (sn tau != 0, cn tau != 0) sits inside the tolerance band, i.e. points
// that are limits of Maxwell pairs rather than clean members.
struct maxwell_verdict {
  bool in_max1 = false;
  bool in_max2 = false;
  bool in_max5 = false;
  bool in_max6 = false;
  bool boundary = false;
  double p = 0.0;
  double tau = 0.0;
  std::optional<int> root_index;
};

// Evaluates the reflection-generated Maxwell conditions at nu = (lambda, t),
// lambda in C1 u C2 u C3.  All equalities are tested with absolute
// tolerance tol.
maxwell_verdict maxwell_membership(const extended_covector& nu,
                                   double tol = 1e-9);

// The cut-time upper bound: 2K(k) on C1, 2k p_1^1(k) on C2, pi on C4,
// +infinity on C3 and C5.
double cut_time_bound(covector lambda);

// The bound as a function of the pendulum energy alone.
double tt_of_energy(double e);

struct first_maxwell_time_result {
  double time;  // may be +infinity
  // Set when the would-be first Maxwell time on C2 degenerates
  // (sn tau = 0 at p = p_1^1): the endpoint there is conjugate instead.
  bool conjugate_at_bound;
};

// Infimum of the reflection-generated Maxwell times for the given covector.
first_maxwell_time_result first_maxwell_time(covector lambda);

// The gap case closing the C2 bound: p = p_1^1(k) and sn tau = 0 within tol
// marks Exp(nu) as a conjugate point (a limit of merging Maxwell pairs).
bool is_conjugate_limit_point(const extended_covector& nu, double tol = 1e-9);

}  // namespace se2sr
