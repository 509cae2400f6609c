#include "se2sr/symmetry.hpp"

#include <cmath>

namespace se2sr {

namespace {

void check_reflection_id(int i) {
  if (i < 1 || i > 7) {
    throw std::invalid_argument("se2sr: reflection id must be in 1..7");
  }
}

covector apply_phase(int i, covector gc) {
  switch (i) {
    case 1: return {gc.gamma, -gc.c};
    case 2: return {-gc.gamma, gc.c};
    case 3: return {-gc.gamma, -gc.c};
    case 4: return {gc.gamma + two_pi, gc.c};
    case 5: return {gc.gamma + two_pi, -gc.c};
    case 6: return {-gc.gamma + two_pi, gc.c};
    default: return {-gc.gamma + two_pi, -gc.c};
  }
}

bool time_reversing(int i) { return i == 1 || i == 2 || i == 5 || i == 6; }

}  // namespace

covector reflect_phase(int i, covector gc) {
  check_reflection_id(i);
  covector out = apply_phase(i, gc);
  out.gamma = reduce_gamma(out.gamma);
  return out;
}

extended_covector reflect_covector(int i, const extended_covector& nu) {
  check_reflection_id(i);
  const covector base = time_reversing(i)
                            ? pendulum_flow(nu.lambda, nu.t)
                            : nu.lambda;
  covector out = apply_phase(i, base);
  out.gamma = reduce_gamma(out.gamma);
  return {out, nu.t};
}

pose reflect_pose(int i, const pose& q) {
  check_reflection_id(i);
  const double ct = std::cos(q.theta);
  const double st = std::sin(q.theta);
  pose out;
  switch (i) {
    case 1:
      out = {q.x * ct + q.y * st, q.x * st - q.y * ct, q.theta};
      break;
    case 2:
      out = {-q.x * ct - q.y * st, -q.x * st + q.y * ct, q.theta};
      break;
    case 3:
      out = {-q.x, -q.y, q.theta};
      break;
    case 4:
      out = {-q.x, q.y, -q.theta};
      break;
    case 5:
      out = {-q.x * ct - q.y * st, q.x * st - q.y * ct, -q.theta};
      break;
    case 6:
      out = {q.x * ct + q.y * st, -q.x * st + q.y * ct, -q.theta};
      break;
    default:
      out = {q.x, -q.y, -q.theta};
      break;
  }
  out.theta = reduce_angle(out.theta);
  return out;
}

std::vector<geodesic_sample> reflect_trajectory(int i,
                                                const extended_covector& nu,
                                                int n) {
  check_reflection_id(i);
  const std::vector<geodesic_sample> base = trace(nu, n);
  const pose qt = base.back().q;
  const double ct = std::cos(qt.theta);
  const double st = std::sin(qt.theta);

  std::vector<geodesic_sample> out(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    // time-reversing reflections read the base trajectory backwards
    const geodesic_sample& src =
        time_reversing(i) ? base[base.size() - 1 - j] : base[j];
    geodesic_sample& dst = out[j];
    dst.s = base[j].s;
    const double dx = qt.x - src.q.x;
    const double dy = qt.y - src.q.y;
    covector gc{src.gamma, src.c};
    switch (i) {
      case 1:
        dst.q = {ct * dx + st * dy, st * dx - ct * dy, qt.theta - src.q.theta};
        gc = {src.gamma, -src.c};
        break;
      case 2:
        dst.q = {-ct * dx - st * dy, -st * dx + ct * dy,
                 qt.theta - src.q.theta};
        gc = {-src.gamma, src.c};
        break;
      case 3:
        dst.q = {-src.q.x, -src.q.y, src.q.theta};
        gc = {-src.gamma, -src.c};
        break;
      case 4:
        dst.q = {-src.q.x, src.q.y, -src.q.theta};
        gc = {src.gamma + two_pi, src.c};
        break;
      case 5:
        dst.q = {-ct * dx - st * dy, st * dx - ct * dy,
                 src.q.theta - qt.theta};
        gc = {src.gamma + two_pi, -src.c};
        break;
      case 6:
        dst.q = {ct * dx + st * dy, -st * dx + ct * dy,
                 src.q.theta - qt.theta};
        gc = {-src.gamma + two_pi, src.c};
        break;
      default:
        dst.q = {src.q.x, -src.q.y, -src.q.theta};
        gc = {-src.gamma + two_pi, -src.c};
        break;
    }
    dst.q.theta = reduce_angle(dst.q.theta);
    dst.gamma = reduce_gamma(gc.gamma);
    dst.c = gc.c;
    const double sh = std::sin(0.5 * dst.gamma);
    dst.cusp = std::abs(sh) < cusp_tolerance;
    dst.curvature = curvature_of_gamma(dst.gamma);
  }
  return out;
}

bool fixed_point_test(int i, const extended_covector& nu) {
  if (i != 1 && i != 2 && i != 5 && i != 6) {
    throw std::invalid_argument(
        "se2sr: fixed points are characterized for the time-reversing "
        "reflections 1, 2, 5, 6");
  }
  if (!(nu.t > 0.0) || !std::isfinite(nu.t)) {
    throw std::invalid_argument("se2sr: fixed_point_test requires t > 0");
  }
  const stratum st = classify(nu.lambda);
  if (st.id == stratum_id::c4 || st.id == stratum_id::c5) {
    throw stratum_error("se2sr: fixed points characterized on C1, C2, C3");
  }
  if (i == 5) {
    return false;
  }
  const elliptic_coords ec = to_elliptic(nu.lambda);
  constexpr double tol = 1e-9;

  if (st.id == stratum_id::c3) {
    // only eps^2 has fixed points on the separatrix, at tau = 0
    const double tau = ec.phi + 0.5 * nu.t;
    return i == 2 && std::abs(tau) <= tol;
  }

  const bool on_c1 = st.id == stratum_id::c1;
  const double tau = on_c1 ? ec.phi + 0.5 * nu.t
                           : ec.psi() + nu.t / (2.0 * ec.k.k());
  const jacobi_triple jt = jacobi(tau, ec.k);
  switch (i) {
    case 1:
      return on_c1 && std::abs(jt.cn) <= tol;
    case 2:
      return std::abs(jt.sn) <= tol;
    default:  // 6
      return !on_c1 && std::abs(jt.cn) <= tol;
  }
}

}  // namespace se2sr
