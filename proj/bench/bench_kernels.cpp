// Timing comparison of the OpenMP kernels against their serial reference.
// Run: se2sr_bench [repetitions]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "se2sr/kernels.hpp"
#include "se2sr/maxwell.hpp"

using namespace se2sr;
using kernels::exec;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    best = std::min(best,
                    std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

std::vector<extended_covector> make_batch(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ug(0.0, four_pi);
  std::uniform_real_distribution<double> uc(-3.0, 3.0);
  std::uniform_real_distribution<double> ut(0.1, 8.0);
  std::vector<extended_covector> out;
  out.reserve(n);
  while (out.size() < n) {
    const covector l{ug(rng), uc(rng)};
    const double e = energy(l);
    if (std::abs(e - 1.0) < 1e-4 || std::abs(e + 1.0) < 1e-6) continue;
    out.push_back({l, ut(rng)});
  }
  return out;
}

void report(const char* name, std::size_t items, double serial,
            double parallel) {
  std::printf("%-18s %9zu items  serial %9.3f ms  omp %9.3f ms  speedup %5.2fx\n",
              name, items, serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const auto batch = make_batch(20000);
    const double s = time_best_of(reps, [&] {
      volatile auto r = kernels::exp_map_batch(batch, exec::serial);
      (void)r;
    });
    const double p = time_best_of(reps, [&] {
      volatile auto r = kernels::exp_map_batch(batch, exec::parallel);
      (void)r;
    });
    report("exp_map_batch", batch.size(), s, p);
  }
  {
    const extended_covector nu{{0.4, 1.2}, 9.0};
    const int n = 200000;
    const double s = time_best_of(reps, [&] {
      volatile auto r = kernels::trace_samples(nu, n, exec::serial);
      (void)r;
    });
    const double p = time_best_of(reps, [&] {
      volatile auto r = kernels::trace_samples(nu, n, exec::parallel);
      (void)r;
    });
    report("trace_samples", n, s, p);
  }
  {
    std::vector<double> ks(2000);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      ks[j] = 0.002 + 0.995 * j / (ks.size() - 1.0);
    }
    const double s = time_best_of(reps, [&] {
      volatile auto r = kernels::p11_grid(ks, exec::serial);
      (void)r;
    });
    const double p = time_best_of(reps, [&] {
      volatile auto r = kernels::p11_grid(ks, exec::parallel);
      (void)r;
    });
    report("p11_grid", ks.size(), s, p);
  }
  {
    std::vector<double> es(2000);
    for (std::size_t j = 0; j < es.size(); ++j) {
      es[j] = -0.999 + 9.0 * j / (es.size() - 1.0);
    }
    const double s = time_best_of(reps, [&] {
      volatile auto r = kernels::tt_curve(es, exec::serial);
      (void)r;
    });
    const double p = time_best_of(reps, [&] {
      volatile auto r = kernels::tt_curve(es, exec::parallel);
      (void)r;
    });
    report("tt_curve", es.size(), s, p);
  }
  {
    const auto batch = make_batch(16);
    const double s = time_best_of(reps, [&] {
      volatile auto r = kernels::oracle_gap(batch, 20000, exec::serial);
      (void)r;
    });
    const double p = time_best_of(reps, [&] {
      volatile auto r = kernels::oracle_gap(batch, 20000, exec::parallel);
      (void)r;
    });
    report("oracle_gap", batch.size(), s, p);
  }
  return 0;
}
