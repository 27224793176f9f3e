// Timing comparison of the OpenMP kernels against their serial reference
// twins, plus one end-to-end norm solve.  Run on a release build; wall
// times are medians over repeated calls.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "eprod/dnorm.hpp"
#include "eprod/kernels.hpp"
#include "eprod/op.hpp"
#include "eprod/states.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace eprod;

std::vector<cx> random_vector(size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cx> v(count);
  for (cx& z : v) z = cx(gauss(rng), gauss(rng));
  return v;
}

template <typename Fn>
double median_ms(int reps, Fn&& fn) {
  std::vector<double> times;
  times.reserve(static_cast<size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void report(const char* name, double parallel_ms, double serial_ms) {
  std::printf("%-20s %10.3f ms   serial %10.3f ms   speedup %.2fx\n", name, parallel_ms,
              serial_ms, parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("openmp disabled: both columns run the same serial code\n");
#endif

  const int reps = 7;

  {
    const long n = 1024;
    const auto a = random_vector(static_cast<size_t>(n) * n, 1);
    const auto x = random_vector(static_cast<size_t>(n), 2);
    std::vector<cx> y(static_cast<size_t>(n));
    report("matvec n=1024",
           median_ms(reps, [&] { kernels::matvec(a.data(), x.data(), y.data(), n); }),
           median_ms(reps, [&] { kernels::matvec_serial(a.data(), x.data(), y.data(), n); }));
    report(
        "matvec_adjoint",
        median_ms(reps, [&] { kernels::matvec_adjoint(a.data(), x.data(), y.data(), n); }),
        median_ms(reps,
                  [&] { kernels::matvec_adjoint_serial(a.data(), x.data(), y.data(), n); }));
  }

  {
    const long ra = 64, rb = 48;
    const auto a = random_vector(static_cast<size_t>(ra) * ra, 3);
    const auto b = random_vector(static_cast<size_t>(rb) * rb, 4);
    std::vector<cx> c(static_cast<size_t>(ra) * ra * rb * rb);
    report("kron 64x64 (x) 48x48",
           median_ms(reps,
                     [&] { kernels::kron_fill(a.data(), ra, ra, b.data(), rb, rb, c.data()); }),
           median_ms(reps, [&] {
             kernels::kron_fill_serial(a.data(), ra, ra, b.data(), rb, rb, c.data());
           }));
  }

  {
    // Trace out the middle factor of a 16 x 16 x 16 register.
    const long keep_dim = 256, tr_dim = 16, n = 4096;
    const auto a = random_vector(static_cast<size_t>(n) * n, 5);
    std::vector<long> keep_off(keep_dim), tr_off(tr_dim);
    for (long r = 0; r < keep_dim; ++r) keep_off[r] = (r / 16) * 256 + (r % 16);
    for (long t = 0; t < tr_dim; ++t) tr_off[t] = t * 16;
    std::vector<cx> out(static_cast<size_t>(keep_dim) * keep_dim);
    report("partial_trace 4096",
           median_ms(reps,
                     [&] {
                       kernels::partial_trace_fill(a.data(), n, keep_off.data(), keep_dim,
                                                   tr_off.data(), tr_dim, out.data());
                     }),
           median_ms(reps, [&] {
             kernels::partial_trace_fill_serial(a.data(), n, keep_off.data(), keep_dim,
                                                tr_off.data(), tr_dim, out.data());
           }));
  }

  {
    // Apply a one-mode matrix on the middle factor of 16 x 16 x 16.
    const long n = 4096, stride = 16, n_base = 256;
    const int d = 16;
    const auto a = random_vector(static_cast<size_t>(n) * n, 6);
    const auto u = random_vector(static_cast<size_t>(d) * d, 7);
    std::vector<long> base(n_base);
    for (long r = 0; r < n_base; ++r) base[r] = (r / 16) * 256 + (r % 16);
    std::vector<cx> b(static_cast<size_t>(n) * n);
    report("mode_apply_cols",
           median_ms(reps,
                     [&] {
                       kernels::mode_apply_cols(a.data(), n, u.data(), d, base.data(), n_base,
                                                stride, b.data());
                     }),
           median_ms(reps, [&] {
             kernels::mode_apply_cols_serial(a.data(), n, u.data(), d, base.data(), n_base,
                                             stride, b.data());
           }));
    report("mode_apply_rows_adj",
           median_ms(reps,
                     [&] {
                       kernels::mode_apply_rows_adj(a.data(), n, u.data(), d, base.data(),
                                                    n_base, stride, b.data());
                     }),
           median_ms(reps, [&] {
             kernels::mode_apply_rows_adj_serial(a.data(), n, u.data(), d, base.data(), n_base,
                                                 stride, b.data());
           }));
  }

  {
    const long n = 4096;
    const int dk = 16;
    const auto a = random_vector(static_cast<size_t>(n) * n, 8);
    const auto r = random_vector(static_cast<size_t>(n), 9);
    std::vector<int> cdigit(static_cast<size_t>(n));
    for (long c = 0; c < n; ++c) cdigit[static_cast<size_t>(c)] = static_cast<int>(c % dk);
    std::vector<cx> y(static_cast<size_t>(n) * dk);
    const auto reset = [&] { std::fill(y.begin(), y.end(), cx(0, 0)); };
    report("env_pass 4096",
           median_ms(reps,
                     [&] {
                       reset();
                       kernels::env_pass(a.data(), n, r.data(), cdigit.data(), dk, y.data());
                     }),
           median_ms(reps, [&] {
             reset();
             kernels::env_pass_serial(a.data(), n, r.data(), cdigit.data(), dk, y.data());
           }));
  }

  {
    // End-to-end: D-norm of a reduced five-particle matrix (dim 625).
    FamilySpec spec;
    spec.family = Family::hf_reduced;
    spec.n = 5;
    spec.p = 4;
    const MultipartiteOperator rho = make_density(spec);
    SolverConfig cfg;
    const double ms = median_ms(3, [&] { (void)dnorm(rho, cfg); });
    std::printf("%-20s %10.3f ms   (dim %ld, full solve)\n", "dnorm hf(5,4)", ms, rho.dim());
  }

  return 0;
}
