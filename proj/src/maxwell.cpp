#include "se2sr/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace se2sr {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// g1 = f1 / cn p and its derivative -dn^2/cn^2; strictly decreasing between
// consecutive poles of 1/cn.
struct g1_eval {
  double value;
  double slope;
};

g1_eval eval_g1(double p, modulus k) {
  const jacobi_triple jt = jacobi(p, k);
  const double pme = p_minus_e(p, k);
  const double value = -(pme + jt.dn * jt.sn / jt.cn);
  const double slope = -(jt.dn * jt.dn) / (jt.cn * jt.cn);
  return {value, slope};
}

// Unique zero of g1 in ((2n-1)K + delta, 2Kn], by Newton safeguarded with
// the bracket; g1 > 0 at the left end (pole side) and g1(2Kn) = E(2Kn) -
// 2Kn < 0.
double root_of_g1(int n, modulus k, double seed) {
  const double big_k = complete_k(k);
  const double delta = 1e-8 * big_k;
  double lo = (2.0 * n - 1.0) * big_k + delta;
  double hi = 2.0 * n * big_k;
  if (eval_g1(lo, k).value <= 0.0 || eval_g1(hi, k).value > 0.0) {
    throw std::runtime_error(
        "se2sr: f1 root bracket failed; bound (2Kn - K, 2Kn] violated");
  }
  double p = std::clamp(seed, lo + delta, hi - delta);
  for (int it = 0; it < 80; ++it) {
    const g1_eval g = eval_g1(p, k);
    if (g.value > 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    double next = p - g.value / g.slope;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - p) < 1e-13 * big_k) {
      return next;
    }
    p = next;
  }
  return p;
}

constexpr double table_k_min = 1e-3;
constexpr double table_k_max = 1.0 - 1e-6;

// Process-wide p_1^1 seed table; built once (single-threaded), then
// immutable for concurrent readers.
const root_table& p11_seed_table() {
  static const root_table t = root_table::build(512, table_k_min, table_k_max);
  return t;
}

// p_1^1(k) at full precision, seeded from the table where possible.
double p11_refined(modulus k) {
  const double kv = k.k();
  if (kv == 0.0) {
    return pi_v;
  }
  double seed = 1.5 * complete_k(k);
  if (kv >= table_k_min && kv <= table_k_max) {
    const root_table& t = p11_seed_table();
    const auto it =
        std::lower_bound(t.k_grid.begin(), t.k_grid.end(), kv);
    const std::size_t j = std::min<std::size_t>(
        t.k_grid.size() - 1,
        static_cast<std::size_t>(it - t.k_grid.begin()));
    seed = t.p11[j];
  }
  return root_of_g1(1, k, seed);
}

bool near_multiple_of(double value, double period, double tol, int* index) {
  const double q = value / period;
  const long n = std::lround(q);
  if (n >= 1 && std::abs(value - period * static_cast<double>(n)) <= tol) {
    if (index) *index = static_cast<int>(n);
    return true;
  }
  return false;
}

}  // namespace

double f1(double p, modulus k) {
  if (p < 0.0) {
    return -f1(-p, k);
  }
  const jacobi_triple jt = jacobi(p, k);
  // cn (E - p) - dn sn, with E - p = -(p - E) in the stable form
  return -jt.cn * p_minus_e(p, k) - jt.dn * jt.sn;
}

double f2(double p, modulus k) {
  if (p < 0.0) {
    return -f2(-p, k);
  }
  // f2 = dn p * g2(p) with g2(p) = int_0^p k^2 cn^2/dn^2; equivalently
  // k^2 cn p sn p + dn p (p - E(p)), which is the combination entering
  // R2 over C1.
  const jacobi_triple jt = jacobi(p, k);
  return k.k2() * jt.cn * jt.sn + jt.dn * p_minus_e(p, k);
}

double p1_root(int n, modulus k) {
  if (n < 1) {
    throw std::invalid_argument("se2sr: p1_root requires n >= 1");
  }
  if (k.is_one()) {
    throw std::domain_error("se2sr: p1_root requires k < 1");
  }
  if (k.k() == 0.0) {
    return pi_v * static_cast<double>(n);
  }
  return root_of_g1(n, k, (2.0 * n - 0.5) * complete_k(k));
}

root_table root_table::build(int points, double k_min, double k_max) {
  if (points < 2 || !(k_min >= 0.0) || !(k_max > k_min) || k_max >= 1.0) {
    throw std::invalid_argument("se2sr: bad root table parameters");
  }
  root_table t;
  t.k_grid.resize(points);
  t.p11.resize(points);
  const double mid = 0.5 * (k_min + k_max);
  const double halfw = 0.5 * (k_max - k_min);
  for (int j = 0; j < points; ++j) {
    // Chebyshev nodes, ascending in k
    t.k_grid[j] =
        mid - halfw * std::cos(pi_v * (2.0 * j + 1.0) / (2.0 * points));
  }
  for (int j = 0; j < points; ++j) {
    t.p11[j] = p1_root(1, modulus(t.k_grid[j]));
  }
  return t;
}

maxwell_verdict maxwell_membership(const extended_covector& nu, double tol) {
  if (!(nu.t > 0.0) || !std::isfinite(nu.t)) {
    throw std::invalid_argument("se2sr: membership requires t > 0");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("se2sr: membership tolerance must be > 0");
  }
  const stratum st = classify(nu.lambda);
  if (st.id == stratum_id::c4 || st.id == stratum_id::c5) {
    throw stratum_error(
        "se2sr: Maxwell membership is defined over C1, C2, C3");
  }
  const elliptic_coords ec = to_elliptic(nu.lambda);
  maxwell_verdict v;

  if (st.id == stratum_id::c3) {
    v.p = 0.5 * nu.t;
    v.tau = ec.phi + v.p;
    return v;  // every stratum is empty over N3
  }

  const modulus k = ec.k;
  const double big_k = complete_k(k);

  if (st.id == stratum_id::c1) {
    v.p = 0.5 * nu.t;
    v.tau = ec.phi + v.p;
    const double q = std::fmod(v.p, 2.0 * big_k);
    v.in_max5 = std::abs(q - big_k) <= tol;
    v.in_max6 = near_multiple_of(v.p, 2.0 * big_k, tol, nullptr);
    return v;
  }

  // C2
  v.p = nu.t / (2.0 * k.k());
  v.tau = ec.psi() + v.p;
  const jacobi_triple jtau = jacobi(v.tau, k);
  if (near_multiple_of(v.p, 2.0 * big_k, tol, nullptr)) {
    if (std::abs(jtau.cn) > tol) {
      v.in_max6 = true;
    } else {
      v.boundary = true;
    }
  }
  // beyond ~1e6 periods the root spacing is below the absolute tolerance
  // anyway, so higher indices cannot be decided meaningfully
  const long n_mid =
      std::min<long>(1000000, std::lround(v.p / (2.0 * big_k)));
  for (long n = std::max<long>(1, n_mid - 1); n <= n_mid + 1; ++n) {
    if (v.p <= (2.0 * n - 1.0) * big_k - tol || v.p >= 2.0 * n * big_k + tol) {
      continue;
    }
    const double root = root_of_g1(static_cast<int>(n), k,
                                   (2.0 * n - 0.5) * big_k);
    if (std::abs(v.p - root) <= tol) {
      v.root_index = static_cast<int>(n);
      if (std::abs(jtau.sn) > tol) {
        v.in_max2 = true;
      } else {
        v.boundary = true;
      }
      break;
    }
  }
  return v;
}

double cut_time_bound(covector lambda) {
  const stratum st = classify(lambda);
  const double half = 0.5 * lambda.gamma;
  const double sh = std::sin(half);
  const double m2 = sh * sh + 0.25 * lambda.c * lambda.c;
  switch (st.id) {
    case stratum_id::c1:
      return 2.0 * complete_k(modulus(std::sqrt(m2)));
    case stratum_id::c2: {
      const modulus k(1.0 / std::sqrt(m2));
      return 2.0 * k.k() * p11_refined(k);
    }
    case stratum_id::c4:
      return pi_v;
    default:
      return inf;  // C3 and C5
  }
}

double tt_of_energy(double e) {
  if (!(e >= -1.0 - 1e-12)) {
    throw std::domain_error("se2sr: pendulum energy is bounded below by -1");
  }
  e = std::max(e, -1.0);
  if (e <= -1.0 + 1e-10) {
    return pi_v;  // C4
  }
  if (std::abs(e - 1.0) <= 1e-10) {
    return inf;  // C3 / C5
  }
  if (e < 1.0) {
    return 2.0 * complete_k(modulus(std::sqrt(0.5 * (e + 1.0))));
  }
  const modulus k(std::sqrt(2.0 / (e + 1.0)));
  return 2.0 * k.k() * p11_refined(k);
}

first_maxwell_time_result first_maxwell_time(covector lambda) {
  const stratum st = classify(lambda);
  switch (st.id) {
    case stratum_id::c1: {
      const elliptic_coords ec = to_elliptic(lambda);
      return {2.0 * complete_k(ec.k), false};
    }
    case stratum_id::c2: {
      const elliptic_coords ec = to_elliptic(lambda);
      const double p11 = p11_refined(ec.k);
      const double tau = ec.psi() + p11;
      if (std::abs(jacobi(tau, ec.k).sn) > 1e-9) {
        return {2.0 * ec.k.k() * p11, false};
      }
      return {inf, true};
    }
    case stratum_id::c3:
      return {inf, false};
    default:
      throw stratum_error(
          "se2sr: first Maxwell time is defined over C1, C2, C3");
  }
}

bool is_conjugate_limit_point(const extended_covector& nu, double tol) {
  const stratum st = classify(nu.lambda);
  if (st.id != stratum_id::c2) {
    throw stratum_error(
        "se2sr: the conjugate-limit predicate applies on C2 only");
  }
  const elliptic_coords ec = to_elliptic(nu.lambda);
  const double p = nu.t / (2.0 * ec.k.k());
  if (std::abs(p - p11_refined(ec.k)) > tol) {
    return false;
  }
  const double tau = ec.psi() + p;
  return std::abs(jacobi(tau, ec.k).sn) <= tol;
}

}  // namespace se2sr
