#include "se2sr/geodesic.hpp"

#include <cmath>
#include <limits>

#include "se2sr/kernels.hpp"

namespace se2sr {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

int sign_or_plus(double x) { return x >= 0.0 ? 1 : -1; }

}  // namespace

double curvature_of_gamma(double gamma) {
  const double sh = std::sin(0.5 * gamma);
  const double ch = std::cos(0.5 * gamma);
  if (std::abs(sh) < cusp_tolerance) {
    return ch >= 0.0 ? -inf : inf;
  }
  return -ch / sh;
}

geodesic_evaluator::geodesic_evaluator(covector lambda) : branch_(stratum_id::c1) {
  if (!std::isfinite(lambda.gamma) || !std::isfinite(lambda.c)) {
    throw std::domain_error("se2sr: non-finite covector");
  }
  const double e = energy(lambda);
  const double half = 0.5 * lambda.gamma;
  const double sh = std::sin(half);
  const double ch = std::cos(half);

  if (e <= -1.0 + 1e-10) {
    branch_ = stratum_id::c4;
    gamma0_ = lambda.gamma;
    dir_ = sign_or_plus(ch);
    return;
  }
  if (std::abs(e - 1.0) <= separatrix_dispatch_band) {
    if (std::abs(lambda.c) <= 1e-10) {
      branch_ = stratum_id::c5;
      gamma0_ = lambda.gamma;
      dir_ = sign_or_plus(sh);
      return;
    }
    branch_ = stratum_id::c3;
    s1_ = sign_or_plus(ch);
    s2_ = sign_or_plus(lambda.c);
    if (std::abs(sh) < 0.9) {
      base_ = std::atanh(s1_ * s2_ * sh);
    } else {
      const double mag = std::acosh(std::max(1.0, 2.0 / std::abs(lambda.c)));
      base_ = (s1_ * s2_ * sh >= 0.0 ? 1.0 : -1.0) * mag;
    }
    th0_ = std::tanh(base_);
    sech0_ = 1.0 / std::cosh(base_);
    return;
  }

  const elliptic_coords ec = to_elliptic(lambda);
  k_ = ec.k.k();
  s1_ = ec.s1;
  s2_ = ec.s2;
  branch_ = ec.chart;
  base_ = (ec.chart == stratum_id::c2) ? ec.psi() : ec.phi;
  const jacobi_triple jt = jacobi(base_, ec.k);
  sn0_ = jt.sn;
  cn0_ = jt.cn;
  dn0_ = jt.dn;
  eps0_ = jacobi_epsilon(base_, ec.k);
}

pose geodesic_evaluator::pose_at(double s) const {
  switch (branch_) {
    case stratum_id::c1: {
      const modulus k(k_);
      const double ut = base_ + s;
      const jacobi_triple jt = jacobi(ut, k);
      const double a = dn0_ - jt.dn;
      const double b = s + eps0_ - jacobi_epsilon(ut, k);
      const double x = (s1_ / k_) * (cn0_ * a + sn0_ * b);
      const double y = (1.0 / k_) * (sn0_ * a - cn0_ * b);
      const double cos_th = cn0_ * jt.cn + sn0_ * jt.sn;
      const double sin_th = s1_ * (sn0_ * jt.cn - cn0_ * jt.sn);
      return {x, y, std::atan2(sin_th, cos_th)};
    }
    case stratum_id::c2: {
      const modulus k(k_);
      const double ut = base_ + s / k_;
      const jacobi_triple jt = jacobi(ut, k);
      const double a = cn0_ - jt.cn;
      const double b = s / k_ + eps0_ - jacobi_epsilon(ut, k);
      const double x = s2_ * k_ * (dn0_ * a + sn0_ * b);
      const double y = s2_ * (k_ * k_ * sn0_ * a - dn0_ * b);
      const double cos_th = k_ * k_ * sn0_ * jt.sn + dn0_ * jt.dn;
      const double sin_th = k_ * (sn0_ * jt.dn - dn0_ * jt.sn);
      return {x, y, std::atan2(sin_th, cos_th)};
    }
    case stratum_id::c3: {
      const double ut = base_ + s;
      const double tht = std::tanh(ut);
      const double secht = 1.0 / std::cosh(ut);
      const double a = sech0_ - secht;
      const double b = s + th0_ - tht;
      const double x = s1_ * s2_ * (sech0_ * a + th0_ * b);
      const double y = s2_ * (th0_ * a - sech0_ * b);
      const double cos_th = sech0_ * secht + th0_ * tht;
      const double sin_th = s1_ * (th0_ * secht - tht * sech0_);
      return {x, y, std::atan2(sin_th, cos_th)};
    }
    case stratum_id::c4:
      return {0.0, 0.0, reduce_angle(-dir_ * s)};
    case stratum_id::c5:
    default:
      return {dir_ * s, 0.0, 0.0};
  }
}

geodesic_sample geodesic_evaluator::sample_at(double s) const {
  geodesic_sample out;
  out.s = s;
  out.q = pose_at(s);
  double sh;
  double ch;
  switch (branch_) {
    case stratum_id::c1: {
      const jacobi_triple jt = jacobi(base_ + s, modulus(k_));
      sh = s1_ * k_ * jt.sn;
      ch = s1_ * jt.dn;
      out.c = 2.0 * k_ * jt.cn;
      break;
    }
    case stratum_id::c2: {
      const jacobi_triple jt = jacobi(base_ + s / k_, modulus(k_));
      sh = s2_ * jt.sn;
      ch = jt.cn;
      out.c = 2.0 * s2_ * jt.dn / k_;
      break;
    }
    case stratum_id::c3: {
      const double ut = base_ + s;
      const double sech = 1.0 / std::cosh(ut);
      sh = s1_ * s2_ * std::tanh(ut);
      ch = s1_ * sech;
      out.c = 2.0 * s2_ * sech;
      break;
    }
    default: {
      sh = std::sin(0.5 * gamma0_);
      ch = std::cos(0.5 * gamma0_);
      out.c = 0.0;
      break;
    }
  }
  out.gamma = (branch_ == stratum_id::c4 || branch_ == stratum_id::c5)
                  ? reduce_gamma(gamma0_)
                  : reduce_gamma(2.0 * std::atan2(sh, ch));
  out.cusp = std::abs(sh) < cusp_tolerance;
  out.curvature = out.cusp ? (ch >= 0.0 ? -inf : inf) : -ch / sh;
  return out;
}

pose exp_map(const extended_covector& nu) {
  if (!(nu.t > 0.0) || !std::isfinite(nu.t)) {
    throw std::invalid_argument("se2sr: exp_map requires t > 0");
  }
  return geodesic_evaluator(nu.lambda).pose_at(nu.t);
}

std::vector<geodesic_sample> trace(const extended_covector& nu,
                                   int n_samples) {
  return kernels::trace_samples(nu, n_samples, kernels::exec::parallel);
}

endpoint_functions closed_form_endpoint_functions(
    const extended_covector& nu) {
  if (!(nu.t > 0.0) || !std::isfinite(nu.t)) {
    throw std::invalid_argument(
        "se2sr: endpoint functions require t > 0");
  }
  const stratum st = classify(nu.lambda);
  if (st.id != stratum_id::c1 && st.id != stratum_id::c2) {
    throw stratum_error(
        "se2sr: closed-form endpoint functions exist on C1 and C2 only");
  }
  const elliptic_coords ec = to_elliptic(nu.lambda);
  const modulus k = ec.k;
  const double kv = k.k();

  endpoint_functions out;
  if (st.id == stratum_id::c1) {
    out.p = 0.5 * nu.t;
    out.tau = ec.phi + out.p;
    const jacobi_triple jp = jacobi(out.p, k);
    const jacobi_triple jtau = jacobi(out.tau, k);
    // Delta = 1 - k^2 sn^2 p sn^2 tau, in the positive combination
    const double delta =
        jp.cn * jp.cn + jp.sn * jp.sn * jtau.dn * jtau.dn;
    const double sq = std::sqrt(delta);
    const double pme = p_minus_e(out.p, k);
    const double f2 = kv * kv * jp.cn * jp.sn + jp.dn * pme;
    const int s3 = sign_or_plus(jp.cn);
    const int s4 = -ec.s1 * s3;
    out.sin_theta = -ec.s1 * 2.0 * jp.cn * jp.sn * jtau.dn / delta;
    out.cos_half_theta = s3 * jp.cn / sq;
    out.sin_half_theta = s4 * jp.sn * jtau.dn / sq;
    out.r1 = -s3 * 2.0 * pme * jtau.cn / (kv * sq);
    out.r2 = -s4 * 2.0 * f2 * jtau.sn / (kv * sq);
  } else {
    out.p = nu.t / (2.0 * kv);
    out.tau = ec.psi() + out.p;
    const jacobi_triple jp = jacobi(out.p, k);
    const jacobi_triple jtau = jacobi(out.tau, k);
    const double delta =
        jp.dn * jp.dn + kv * kv * jp.sn * jp.sn * jtau.cn * jtau.cn;
    const double sq = std::sqrt(delta);
    const double pme = p_minus_e(out.p, k);
    const double f1 = -jp.cn * pme - jp.dn * jp.sn;
    out.sin_theta = -2.0 * kv * jp.sn * jp.dn * jtau.cn / delta;
    out.cos_half_theta = jp.dn / sq;           // s3 = +1: dn > 0
    out.sin_half_theta = -kv * jp.sn * jtau.cn / sq;
    out.r1 = -ec.s2 * 2.0 * pme * jtau.dn / sq;
    out.r2 = -ec.s2 * 2.0 * kv * f1 * jtau.sn / sq;
  }
  return out;
}

double r1_of_pose(const pose& q) {
  const double h = 0.5 * reduce_angle(q.theta);
  return q.y * std::cos(h) - q.x * std::sin(h);
}

double r2_of_pose(const pose& q) {
  const double h = 0.5 * reduce_angle(q.theta);
  return q.x * std::cos(h) + q.y * std::sin(h);
}

double pose_distance(const pose& a, const pose& b) {
  double d = std::abs(a.x - b.x);
  d = std::max(d, std::abs(a.y - b.y));
  double dth = std::fmod(a.theta - b.theta, two_pi);
  if (dth > pi_v) dth -= two_pi;
  if (dth < -pi_v) dth += two_pi;
  return std::max(d, std::abs(dth));
}

}  // namespace se2sr
