// Micro-benchmark comparing the vectorized cascade kernel against the serial
// reference implementation, and the full simulator with each kernel.
#include <chrono>
#include <cstdio>
#include <vector>

#include "aeris/mc_kernel.hpp"
#include "aeris/rng.hpp"

int main(int argc, char** argv) {
  const int n_elements = argc > 1 ? std::atoi(argv[1]) : 256;
  const int trials = argc > 2 ? std::atoi(argv[2]) : 200000;

  const double mu_u = 0.9, s_u = 0.3, mu_d = 0.85, s_d = 0.35;
  std::vector<double> u(4 * static_cast<std::size_t>(n_elements));

  const auto run = [&](auto kernel, const char* label) {
    aeris::rng::Xoshiro256pp gen = aeris::rng::trial_stream(42, 0, 0);
    double acc = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int t = 0; t < trials; ++t) {
      for (double& x : u) x = gen.uniform_pos();
      acc += kernel(u.data(), n_elements, mu_u, s_u, mu_d, s_d);
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double sec = std::chrono::duration<double>(t1 - t0).count();
    const double per =
        sec / (static_cast<double>(trials) * n_elements) * 1e9;
    std::printf("%-10s  %8.3f s total  %7.2f ns/element  (checksum %.6g)\n",
                label, sec, per, acc);
    return sec;
  };

  std::printf("cascade kernel, N=%d elements, %d trials\n", n_elements,
              trials);
  const double t_ref = run(aeris::mc::cascade_sum_ref, "reference");
  const double t_fast = run(aeris::mc::cascade_sum_fast, "fast");
  std::printf("speedup: %.2fx\n", t_ref / t_fast);
  return 0;
}
