#include "se2sr/phase_cylinder.hpp"

#include <cmath>

namespace se2sr {

namespace {

int sign_or_plus(double x) { return x >= 0.0 ? 1 : -1; }

void require_finite_covector(covector lambda) {
  if (!std::isfinite(lambda.gamma) || !std::isfinite(lambda.c)) {
    throw std::domain_error("se2sr: non-finite covector");
  }
}

}  // namespace

double reduce_gamma(double gamma) {
  double r = std::fmod(gamma, four_pi);
  if (r < 0.0) r += four_pi;
  return r;
}

double reduce_angle(double angle) {
  double r = std::fmod(angle, two_pi);
  if (r > pi_v) r -= two_pi;
  if (r <= -pi_v) r += two_pi;
  return r;
}

double energy(covector lambda) {
  return 0.5 * lambda.c * lambda.c - std::cos(lambda.gamma);
}

stratum classify(covector lambda, double tol) {
  require_finite_covector(lambda);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("se2sr: classification tolerance must be > 0");
  }
  const double e = energy(lambda);
  const double half = 0.5 * lambda.gamma;
  if (e <= -1.0 + tol) {
    return {stratum_id::c4, std::cos(half) >= 0.0 ? 0 : 1, 0};
  }
  if (std::abs(e - 1.0) <= tol) {
    if (std::abs(lambda.c) <= tol) {
      return {stratum_id::c5, std::sin(half) >= 0.0 ? 0 : 1, 0};
    }
    return {stratum_id::c3, std::cos(half) >= 0.0 ? 0 : 1,
            sign_or_plus(lambda.c)};
  }
  if (e < 1.0) {
    return {stratum_id::c1, std::cos(half) >= 0.0 ? 0 : 1, 0};
  }
  return {stratum_id::c2, 0, sign_or_plus(lambda.c)};
}

elliptic_coords to_elliptic(covector lambda) {
  const stratum st = classify(lambda);
  const double half = 0.5 * lambda.gamma;
  const double sh = std::sin(half);
  const double ch = std::cos(half);

  switch (st.id) {
    case stratum_id::c1: {
      const modulus k(std::sqrt(sh * sh + 0.25 * lambda.c * lambda.c));
      const int s1 = sign_or_plus(ch);
      const double sn = sh / (s1 * k.k());
      const double cn = lambda.c / (2.0 * k.k());
      double phi = inverse_am(std::atan2(sn, cn), k);
      const double period = 4.0 * complete_k(k);
      phi = std::fmod(phi, period);
      if (phi < 0.0) phi += period;
      return {stratum_id::c1, phi, k, s1, 1};
    }
    case stratum_id::c2: {
      const modulus k(1.0 / std::sqrt(sh * sh + 0.25 * lambda.c * lambda.c));
      const int s2 = sign_or_plus(lambda.c);
      const double sn = s2 * sh;
      const double cn = ch;
      double psi = inverse_am(std::atan2(sn, cn), k);
      const double period = 4.0 * complete_k(k);
      psi = std::fmod(psi, period);
      if (psi < 0.0) psi += period;
      return {stratum_id::c2, k.k() * psi, k, 1, s2};
    }
    case stratum_id::c3: {
      const int s1 = sign_or_plus(ch);
      const int s2 = sign_or_plus(lambda.c);
      // Invert through whichever chart relation is well conditioned:
      // tanh phi = s1 s2 sin(gamma/2) away from the poles of artanh,
      // cosh phi = 2/|c| when sin(gamma/2) is close to +-1.
      double phi;
      if (std::abs(sh) < 0.9) {
        phi = std::atanh(s1 * s2 * sh);
      } else {
        const double mag = std::acosh(std::max(1.0, 2.0 / std::abs(lambda.c)));
        phi = (s1 * s2 * sh >= 0.0 ? 1.0 : -1.0) * mag;
      }
      return {stratum_id::c3, phi, modulus(1.0), s1, s2};
    }
    default:
      throw stratum_error(
          "se2sr: elliptic coordinates are undefined on the equilibria "
          "C4 and C5");
  }
}

covector from_elliptic(const elliptic_coords& ec) {
  if (!std::isfinite(ec.phi)) {
    throw std::invalid_argument("se2sr: non-finite chart coordinate phi");
  }
  if (std::abs(ec.s1) != 1 || std::abs(ec.s2) != 1) {
    throw std::invalid_argument("se2sr: chart signs must be +-1");
  }
  double sh;
  double ch;
  double c;
  switch (ec.chart) {
    case stratum_id::c1: {
      if (ec.k.is_one() || ec.k.k() == 0.0) {
        throw std::invalid_argument("se2sr: C1 chart requires 0 < k < 1");
      }
      const jacobi_triple jt = jacobi(ec.phi, ec.k);
      sh = ec.s1 * ec.k.k() * jt.sn;
      ch = ec.s1 * jt.dn;
      c = 2.0 * ec.k.k() * jt.cn;
      break;
    }
    case stratum_id::c2: {
      if (ec.k.is_one() || ec.k.k() == 0.0) {
        throw std::invalid_argument("se2sr: C2 chart requires 0 < k < 1");
      }
      const jacobi_triple jt = jacobi(ec.psi(), ec.k);
      sh = ec.s2 * jt.sn;
      ch = jt.cn;
      c = 2.0 * ec.s2 * jt.dn / ec.k.k();
      break;
    }
    case stratum_id::c3: {
      if (!ec.k.is_one()) {
        throw std::invalid_argument("se2sr: C3 chart requires k = 1");
      }
      const double th = std::tanh(ec.phi);
      const double sech = 1.0 / std::cosh(ec.phi);
      sh = ec.s1 * ec.s2 * th;
      ch = ec.s1 * sech;
      c = 2.0 * ec.s2 * sech;
      break;
    }
    default:
      throw std::invalid_argument("se2sr: not a chart stratum");
  }
  return {reduce_gamma(2.0 * std::atan2(sh, ch)), c};
}

covector pendulum_flow(covector lambda, double t) {
  if (!std::isfinite(t)) {
    throw std::domain_error("se2sr: non-finite flow time");
  }
  const stratum st = classify(lambda);
  if (st.id == stratum_id::c4 || st.id == stratum_id::c5) {
    return lambda;
  }
  elliptic_coords ec = to_elliptic(lambda);
  ec.phi += t;
  return from_elliptic(ec);
}

}  // namespace se2sr
