#pragma once

#include <stdexcept>

namespace se2sr {

// Width of the modulus band below k = 1 where the Landen/AGM chain is not
// trusted.  Moduli in (1 - band, 1) are rejected; k == 1 exactly is reserved
// for the separatrix chart, which uses hyperbolic closed forms instead.
inline constexpr double k_near_separatrix_band = 1e-9;

// Thrown for moduli in (1 - k_near_separatrix_band, 1).  Callers holding a
// covector that close to the critical energy level should route through the
// k = 1 formulas.
class near_separatrix_error : public std::domain_error {
 public:
  explicit near_separatrix_error(double k);
  double k() const { return k_; }

 private:
  double k_;
};

// Elliptic modulus.  Accepts k in [0, 1 - 1e-9] and k == 1 exactly; throws
// std::domain_error outside [0, 1] and near_separatrix_error inside the
// excluded band.  The table-driven functions below additionally reject
// k == 1 (they have no finite period to work with).
class modulus {
 public:
  explicit modulus(double k);

  double k() const { return k_; }
  double k2() const { return k_ * k_; }
  // Complementary parameter k'^2 = 1 - k^2, computed without cancellation.
  double kp2() const { return (1.0 - k_) * (1.0 + k_); }
  bool is_one() const { return k_ == 1.0; }

 private:
  double k_;
};

// Values of the Jacobi functions at a common argument (u, k).
// am is the continuous (unwrapped) amplitude branch with am(0) = 0, so
// sn = sin(am) and cn = cos(am) hold globally and am(u + 4K) = am(u) + 2pi.
struct jacobi_triple {
  double sn;
  double cn;
  double dn;
  double am;
};

// Complete elliptic integral of the first kind K(k), by the
// arithmetic-geometric mean (DLMF 19.8.5).  Rejects k == 1.
double complete_k(modulus k);

// Complete elliptic integral of the second kind E(k), from the AGM
// byproduct sum E = K (1 - sum 2^{i-1} c_i^2) (DLMF 19.8.6).
double complete_e(modulus k);

// sn, cn, dn, am at (u, k) via the descending AGM amplitude chain
// (Abramowitz & Stegun 16.4).  The argument is first reduced modulo 2K,
// which keeps the chain angles bounded for any finite u.
jacobi_triple jacobi(double u, modulus k);

// Jacobi epsilon E(u, k) = int_0^u dn^2 t dt.  Computed from the same AGM
// chain as the amplitude: E(u) = (E/K) u + sum_i c_i sin phi_i
// (Abramowitz & Stegun 17.6.10-12), with the sum taken at the reduced
// argument so that the quasi-period E(u + 2K) = E(u) + 2E is exact.
double jacobi_epsilon(double u, modulus k);

// u - E(u, k) = k^2 int_0^u sn^2 t dt, evaluated without forming the
// difference of nearly equal quantities: u (K - E)/K - sum_i c_i sin phi_i,
// with a Maclaurin series for small u.  Nonnegative for u >= 0, strictly
// positive for u > 0 and k > 0.
double p_minus_e(double u, modulus k);

// Inverse amplitude: the u with am(u, k) = chi, i.e. the incomplete integral
// of the first kind F(chi, k) extended to all real chi.  Solved by a
// bracketed Newton iteration on the AGM amplitude, so it shares precision
// with jacobi().
double inverse_am(double chi, modulus k);

}  // namespace se2sr
