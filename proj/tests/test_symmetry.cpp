#include "se2sr/symmetry.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "se2sr/ode_oracle.hpp"
#include "support.hpp"

using namespace se2sr;
namespace tst = se2sr::testing;

namespace {

double gamma_dist(double a, double b) {
  const double d = std::abs(reduce_gamma(a) - reduce_gamma(b));
  return std::min(d, four_pi - d);
}

// unwraps a sampled gamma sequence so finite differences see a smooth curve
std::vector<double> unwrap_gamma(const std::vector<geodesic_sample>& tr) {
  std::vector<double> g(tr.size());
  g[0] = tr[0].gamma;
  for (std::size_t j = 1; j < tr.size(); ++j) {
    double v = tr[j].gamma;
    while (v - g[j - 1] > two_pi) v -= four_pi;
    while (v - g[j - 1] < -two_pi) v += four_pi;
    g[j] = v;
  }
  return g;
}

}  // namespace

TEST_CASE("phase reflections") {
  const covector a = reflect_phase(1, {1.0, 0.5});
  CHECK(a.gamma == doctest::Approx(1.0));
  CHECK(a.c == -0.5);

  const covector b = reflect_phase(7, {1.0, 0.5});
  CHECK(b.gamma == doctest::Approx(two_pi - 1.0));
  CHECK(b.c == -0.5);

  // every reflection is an involution on the phase cylinder
  auto rng = tst::make_rng(3);
  std::uniform_real_distribution<double> ug(0.0, four_pi);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  for (int i = 1; i <= 7; ++i) {
    for (int rep = 0; rep < 20; ++rep) {
      const covector gc{ug(rng), uc(rng)};
      const covector twice = reflect_phase(i, reflect_phase(i, gc));
      CHECK(gamma_dist(twice.gamma, gc.gamma) < 1e-12);
      CHECK(twice.c == doctest::Approx(gc.c));
    }
  }
  CHECK_THROWS_AS(reflect_phase(0, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(reflect_phase(8, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("covector reflections") {
  {
    const extended_covector r = reflect_covector(3, {{1.3, 0.4}, 2.0});
    CHECK(gamma_dist(r.lambda.gamma, -1.3) < 1e-12);
    CHECK(r.lambda.c == -0.4);
    CHECK(r.t == 2.0);
  }
  {
    const extended_covector r = reflect_covector(4, {{1.3, 0.4}, 2.0});
    CHECK(gamma_dist(r.lambda.gamma, 1.3 + two_pi) < 1e-12);
    CHECK(r.lambda.c == 0.4);
  }
  {
    // i = 1 needs the pendulum endpoint; cross-check it with RK4
    const extended_covector nu{{1.0, 1.0}, 2.0};
    const extended_covector r = reflect_covector(1, nu);
    const auto end = tst::pendulum_by_ode(1.0, 1.0, 2.0);
    CHECK(gamma_dist(r.lambda.gamma, end[0]) < 1e-9);
    CHECK(r.lambda.c == doctest::Approx(-end[1]).epsilon(1e-9));
  }
}

TEST_CASE("pose reflections: table, involution, composition") {
  const pose q{1.0, 2.0, pi_v / 3.0};

  const pose p3 = reflect_pose(3, q);
  CHECK(p3.x == -1.0);
  CHECK(p3.y == -2.0);
  CHECK(p3.theta == doctest::Approx(pi_v / 3.0));

  const pose p7 = reflect_pose(7, q);
  CHECK(p7.x == 1.0);
  CHECK(p7.y == -2.0);
  CHECK(p7.theta == doctest::Approx(-pi_v / 3.0));

  const pose origin{0.0, 0.0, 1.1};
  const pose p1 = reflect_pose(1, origin);
  CHECK(p1.x == 0.0);
  CHECK(p1.y == 0.0);
  CHECK(p1.theta == doctest::Approx(1.1));

  auto rng = tst::make_rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 1; i <= 7; ++i) {
    for (int rep = 0; rep < 25; ++rep) {
      const pose p{u(rng), u(rng), u(rng)};
      const pose twice = reflect_pose(i, reflect_pose(i, p));
      CHECK(pose_distance(twice, p) < 1e-13);
    }
  }
  for (int i = 1; i <= 3; ++i) {
    for (int rep = 0; rep < 25; ++rep) {
      const pose p{u(rng), u(rng), u(rng)};
      const pose lhs = reflect_pose(i + 4, p);
      const pose rhs = reflect_pose(4, reflect_pose(i, p));
      CHECK(pose_distance(lhs, rhs) < 1e-15);
    }
  }
}

TEST_CASE("commutation diagram Exp o eps = eps o Exp") {
  auto rng = tst::make_rng(2718);
  std::uniform_real_distribution<double> ut(0.05, 10.0);
  double worst = 0.0;
  for (int which = 1; which <= 5; ++which) {
    for (int i = 1; i <= 7; ++i) {
      for (int rep = 0; rep < 15; ++rep) {
        const extended_covector nu{tst::sample_stratum(which, rng), ut(rng)};
        const pose lhs = reflect_pose(i, exp_map(nu));
        const pose rhs = exp_map(reflect_covector(i, nu));
        worst = std::max(worst, pose_distance(lhs, rhs));
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("reflected trajectories match traces of reflected covectors") {
  auto rng = tst::make_rng(424242);
  std::uniform_real_distribution<double> ut(0.3, 6.0);
  const int n = 33;
  for (int which : {1, 2, 3}) {
    for (int i = 1; i <= 7; ++i) {
      const extended_covector nu{tst::sample_stratum(which, rng), ut(rng)};
      const auto refl = reflect_trajectory(i, nu, n);
      const auto direct = trace(reflect_covector(i, nu), n);
      REQUIRE(refl.size() == direct.size());
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, pose_distance(refl[j].q, direct[j].q));
        worst = std::max(worst, gamma_dist(refl[j].gamma, direct[j].gamma));
        worst = std::max(worst, std::abs(refl[j].c - direct[j].c));
      }
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("endpoint sample of a time-reversing reflection") {
  // at s = t item (1) gives theta^1_t = theta_t - theta_0 = theta_t
  const extended_covector nu{{0.8, 0.6}, 3.0};
  const auto refl = reflect_trajectory(1, nu, 17);
  const pose qt = exp_map(nu);
  CHECK(std::abs(reduce_angle(refl.back().q.theta - qt.theta)) < 1e-12);
}

TEST_CASE("reflected phase curves satisfy the pendulum equation") {
  auto rng = tst::make_rng(5150);
  const double t = 2.0;
  const int n = 20001;
  const double h = t / (n - 1);
  for (int i : {1, 2, 3, 4, 5, 6, 7}) {
    const extended_covector nu{tst::sample_stratum(1 + (i % 2), rng), t};
    const auto refl = reflect_trajectory(i, nu, n);
    const auto g = unwrap_gamma(refl);
    double worst = 0.0;
    for (int j = 1; j + 1 < n; ++j) {
      const double dg = (g[j + 1] - g[j - 1]) / (2.0 * h);
      const double dc = (refl[j + 1].c - refl[j - 1].c) / (2.0 * h);
      worst = std::max(worst, std::abs(dg - refl[j].c));
      worst = std::max(worst, std::abs(dc + std::sin(g[j])));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("fixed points of the time-reversing reflections") {
  const double k = 0.6;
  const double big_k = complete_k(modulus(k));

  // eps^5 never fixes a covector
  CHECK_FALSE(fixed_point_test(5, {tst::c1_point(0.3, k), 1.0}));
  CHECK_FALSE(fixed_point_test(5, {tst::c2_point(0.3, k, +1), 1.0}));

  // eps^1 on C1 at cn tau = 0: tau = phi + t/2 = K
  {
    const double t = 1.0;
    const covector l = tst::c1_point(big_k - 0.5 * t, k);
    const extended_covector nu{l, t};
    CHECK(fixed_point_test(1, nu));
    const extended_covector r = reflect_covector(1, nu);
    CHECK(gamma_dist(r.lambda.gamma, l.gamma) < 1e-9);
    CHECK(std::abs(r.lambda.c - l.c) < 1e-9);
    CHECK_FALSE(fixed_point_test(1, {tst::c1_point(big_k - 0.3, k), 1.0}));
  }
  // eps^1 is never fixed on C2
  CHECK_FALSE(fixed_point_test(1, {tst::c2_point(big_k, k, +1),
                                   2.0 * k * 0.0 + 1.0}));

  // eps^2 on C1/C2 at sn tau = 0, and on C3 at tau = 0
  {
    const double t = 1.4;
    const covector l = tst::c1_point(2.0 * big_k - 0.5 * t, k);
    CHECK(fixed_point_test(2, {l, t}));
    const covector l2 = tst::c2_point(2.0 * big_k - t / (2.0 * k), k, -1);
    CHECK(fixed_point_test(2, {l2, t}));
    const covector sep =
        from_elliptic({stratum_id::c3, -1.0, modulus(1.0), +1, +1});
    CHECK(fixed_point_test(2, {sep, 2.0}));
    CHECK_FALSE(fixed_point_test(2, {sep, 2.5}));
  }

  // eps^6 fixes only C2 covectors, at cn tau = 0
  {
    const double t = 0.8;
    const covector l2 = tst::c2_point(big_k - t / (2.0 * k), k, +1);
    CHECK(fixed_point_test(6, {l2, t}));
    CHECK_FALSE(fixed_point_test(6, {tst::c1_point(big_k - 0.4, k), 0.8}));
  }

  CHECK_THROWS_AS(fixed_point_test(3, {tst::c1_point(0.3, k), 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_test(1, {{0.0, 0.0}, 1.0}), stratum_error);
}
