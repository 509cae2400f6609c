#pragma once

#include <span>
#include <vector>

#include "se2sr/geodesic.hpp"

namespace se2sr::kernels {

// Every kernel below evaluates its elements independently with the same
// scalar code path, so the two policies produce bitwise-identical results;
// the serial variant is the reference the parallel one is tested against.
enum class exec { serial, parallel };

// One endpoint pose per covector-time pair.
std::vector<pose> exp_map_batch(std::span<const extended_covector> nus,
                                exec policy);

// n_samples >= 2 uniformly spaced samples of the geodesic on [0, t].
std::vector<geodesic_sample> trace_samples(const extended_covector& nu,
                                           int n_samples, exec policy);

// First positive root p_1^1 of f1 per modulus.
std::vector<double> p11_grid(std::span<const double> ks, exec policy);

// Cut-time bound as a function of energy, elementwise.
std::vector<double> tt_curve(std::span<const double> energies, exec policy);

// Componentwise gap |exp_map - RK4| per covector-time pair, using
// steps_per_unit fixed steps per unit time (at least 1000).
std::vector<double> oracle_gap(std::span<const extended_covector> nus,
                               long steps_per_unit, exec policy);

}  // namespace se2sr::kernels
