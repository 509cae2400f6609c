#pragma once

#include <vector>

#include "se2sr/geodesic.hpp"

namespace se2sr {

// The reflection group {eps^1, ..., eps^7} of the pendulum phase portrait
// (the symmetry group of a parallelepiped, eps^{i+4} = eps^4 o eps^i),
// extended to covectors, trajectories and endpoints so that
// Exp o eps^i = eps^i o Exp.

// Action on a phase point (gamma, c); gamma of the result is reduced into
// [0, 4 pi).  i in {1, ..., 7}.
covector reflect_phase(int i, covector gc);

// Action in the preimage of the exponential map: nu = (lambda, t) ->
// (lambda^i, t).  The time-reversing reflections i in {1, 2, 5, 6} read the
// pendulum state at time t, the time-preserving ones act on lambda directly.
extended_covector reflect_covector(int i, const extended_covector& nu);

// Action on endpoints q = (x, y, theta) in SE(2).
pose reflect_pose(int i, const pose& q);

// The reflected extremal trajectory, sampled at n uniform times; equals
// trace(reflect_covector(i, nu), n) up to roundoff.
std::vector<geodesic_sample> reflect_trajectory(int i,
                                                const extended_covector& nu,
                                                int n);

// Whether lambda^i = lambda, decided through the chart conditions
// (cn tau = 0, sn tau = 0, tau = 0) with tolerance 1e-9.  Defined for the
// time-reversing reflections i in {1, 2, 5, 6} on C1 u C2 u C3.
bool fixed_point_test(int i, const extended_covector& nu);

}  // namespace se2sr
