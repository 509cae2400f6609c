#include "se2sr/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace se2sr {

namespace {

constexpr double pi = 3.14159265358979323846;

// AGM ladder a_i, b_i with c_i = (a_{i-1} - b_{i-1})/2 (c_0 = k).
// Quadratic convergence: depth stays below ~12 for k <= 1 - 1e-9.
struct agm_chain {
  static constexpr int max_depth = 32;
  int depth = 0;
  std::array<double, max_depth> a{};
  std::array<double, max_depth> c{};

  double agm() const { return a[depth]; }
};

agm_chain build_chain(double k) {
  agm_chain ch;
  double a = 1.0;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  ch.a[0] = a;
  ch.c[0] = k;
  int i = 0;
  while (ch.c[i] > a * std::numeric_limits<double>::epsilon() &&
         i + 1 < agm_chain::max_depth) {
    const double an = 0.5 * (a + b);
    const double cn = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++i;
    ch.a[i] = a;
    ch.c[i] = cn;
  }
  ch.depth = i;
  return ch;
}

// sum 2^{i-1} c_i^2 over the chain; equals (K - E)/K.
double k_minus_e_over_k(const agm_chain& ch) {
  double s = 0.0;
  double w = 0.5;
  for (int i = 0; i <= ch.depth; ++i) {
    s += w * ch.c[i] * ch.c[i];
    w *= 2.0;
  }
  return s;
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Amplitude and descending-chain angles at an argument already reduced into
// [-K, K].  phi[i] is the amplitude at chain level i; phi[0] = am(r, k).
struct amplitude_result {
  double am;
  std::array<double, agm_chain::max_depth> phi{};
};

amplitude_result amplitude_reduced(double r, const agm_chain& ch) {
  amplitude_result out;
  const int n = ch.depth;
  double phi = std::ldexp(ch.a[n] * r, n);
  out.phi[n] = phi;
  for (int i = n; i >= 1; --i) {
    phi = 0.5 * (phi + std::asin(clamp_unit(ch.c[i] / ch.a[i] * std::sin(phi))));
    out.phi[i - 1] = phi;
  }
  out.am = phi;
  return out;
}

void require_finite(double u) {
  if (!std::isfinite(u)) {
    throw std::domain_error("se2sr: non-finite argument to elliptic function");
  }
}

void require_table_modulus(modulus k) {
  if (k.is_one()) {
    throw std::domain_error(
        "se2sr: k = 1 is outside the table-driven elliptic functions; "
        "use the hyperbolic limit formulas");
  }
}

// Shared state for jacobi / epsilon / p - E at one (u, k).
struct reduced_eval {
  agm_chain chain;
  amplitude_result amp;
  double big_k;      // K(k)
  double r;          // u - 2K m, in [-K, K]
  long long m;       // half-period count
};

reduced_eval evaluate_reduced(double u, modulus k) {
  reduced_eval ev;
  ev.chain = build_chain(k.k());
  ev.big_k = pi / (2.0 * ev.chain.agm());
  double m = std::nearbyint(u / (2.0 * ev.big_k));
  ev.m = static_cast<long long>(m);
  ev.r = u - 2.0 * ev.big_k * m;
  ev.amp = amplitude_reduced(ev.r, ev.chain);
  return ev;
}

// Z(r) = E(r) - (E/K) r, the 2K-periodic part of Jacobi epsilon, from the
// chain byproduct sum (A&S 17.6.12).
double zeta_sum(const reduced_eval& ev) {
  double z = 0.0;
  for (int i = 1; i <= ev.chain.depth; ++i) {
    z += ev.chain.c[i] * std::sin(ev.amp.phi[i]);
  }
  return z;
}

}  // namespace

near_separatrix_error::near_separatrix_error(double k)
    : std::domain_error("se2sr: modulus k = " + std::to_string(k) +
                        " lies in the excluded near-separatrix band"),
      k_(k) {}

modulus::modulus(double k) : k_(k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::domain_error("se2sr: modulus must satisfy 0 <= k <= 1, got " +
                            std::to_string(k));
  }
  if (k < 1.0 && k > 1.0 - k_near_separatrix_band) {
    throw near_separatrix_error(k);
  }
}

double complete_k(modulus k) {
  require_table_modulus(k);
  return pi / (2.0 * build_chain(k.k()).agm());
}

double complete_e(modulus k) {
  require_table_modulus(k);
  const agm_chain ch = build_chain(k.k());
  const double big_k = pi / (2.0 * ch.agm());
  return big_k * (1.0 - k_minus_e_over_k(ch));
}

jacobi_triple jacobi(double u, modulus k) {
  require_finite(u);
  require_table_modulus(k);
  if (k.k() == 0.0) {
    return {std::sin(u), std::cos(u), 1.0, u};
  }
  const reduced_eval ev = evaluate_reduced(u, k);
  const double sn_r = std::sin(ev.amp.am);
  const double cn_r = std::cos(ev.amp.am);
  // dn^2 = k'^2 + k^2 cn^2 avoids the cancellation in 1 - k^2 sn^2.
  const double dn = std::sqrt(k.kp2() + k.k2() * cn_r * cn_r);
  const double sign = (ev.m % 2 == 0) ? 1.0 : -1.0;
  return {sign * sn_r, sign * cn_r, dn,
          ev.amp.am + pi * static_cast<double>(ev.m)};
}

double jacobi_epsilon(double u, modulus k) {
  require_finite(u);
  require_table_modulus(k);
  if (k.k() == 0.0) {
    return u;
  }
  const reduced_eval ev = evaluate_reduced(u, k);
  const double e_over_k = 1.0 - k_minus_e_over_k(ev.chain);
  return e_over_k * u + zeta_sum(ev);
}

double p_minus_e(double u, modulus k) {
  require_finite(u);
  require_table_modulus(k);
  if (u < 0.0) {
    throw std::domain_error("se2sr: p_minus_e requires u >= 0");
  }
  const double k2 = k.k2();
  if (k2 == 0.0) {
    return 0.0;
  }
  if (u < 0.02) {
    // k^2 int_0^u sn^2 = k^2 (u^3/3 - (1+k^2) u^5/15
    //                          + (2+13k^2+2k^4) u^7/315 - ...)
    const double u2 = u * u;
    return k2 * u * u2 *
           (1.0 / 3.0 +
            u2 * (-(1.0 + k2) / 15.0 +
                  u2 * (2.0 + k2 * (13.0 + 2.0 * k2)) / 315.0));
  }
  const reduced_eval ev = evaluate_reduced(u, k);
  return k_minus_e_over_k(ev.chain) * u - zeta_sum(ev);
}

double inverse_am(double chi, modulus k) {
  require_finite(chi);
  require_table_modulus(k);
  if (k.k() == 0.0) {
    return chi;
  }
  const double big_k = complete_k(k);
  const double m = std::nearbyint(chi / pi);
  const double chi_r = chi - pi * m;

  // am is strictly increasing with derivative dn in [k', 1]; a bracketed
  // Newton iteration on [-K, K] cannot escape or stall.
  double lo = -big_k;
  double hi = big_k;
  double u = chi_r * (big_k / (0.5 * pi));
  for (int it = 0; it < 60; ++it) {
    const jacobi_triple jt = jacobi(u, k);
    const double f = jt.am - chi_r;
    if (f > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double step = f / jt.dn;
    double next = u - step;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - u) < 1e-15 * (1.0 + std::abs(u))) {
      u = next;
      break;
    }
    u = next;
  }
  return u + 2.0 * big_k * m;
}

}  // namespace se2sr
