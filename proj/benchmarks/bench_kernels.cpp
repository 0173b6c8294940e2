// Timing comparison of the OpenMP grid kernels against the serial reference.

#include <chrono>
#include <cstdio>

#include "axial/consistency.hpp"
#include "axial/residual.hpp"

using namespace axial;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main() {
    const StateParams p = self_consistent_state(2.0);

    GridSpec big;
    big.rho_max = 20.0;
    big.points = 1 << 20;
    big.derivative_mode = DerivativeMode::central_fd;

    const double t_free_ser =
        time_best_of(3, [&] { serial::free_dirac_residual(p, big); });
    const double t_free_par =
        time_best_of(3, [&] { free_dirac_residual(p, big, 0.0, 1.0, true); });
    std::printf("free residual, %d points:   serial %.3f s, openmp %.3f s, speedup %.2fx\n",
                big.points, t_free_ser, t_free_par, t_free_ser / t_free_par);

    const double t_int_ser = time_best_of(
        3, [&] { serial::interacting_dirac_residual(p, Couplings::test(), big); });
    const double t_int_par = time_best_of(
        3, [&] { interacting_dirac_residual(p, Couplings::test(), big, 0.0, true); });
    std::printf("interacting residual:       serial %.3f s, openmp %.3f s, speedup %.2fx\n",
                t_int_ser, t_int_par, t_int_ser / t_int_par);

    const double t_scan_ser =
        time_best_of(3, [&] { uniqueness_scan(2.0, 512, 512, 5.0, 1e-4, false); });
    const double t_scan_par =
        time_best_of(3, [&] { uniqueness_scan(2.0, 512, 512, 5.0, 1e-4, true); });
    std::printf("uniqueness scan 512x512:    serial %.3f s, openmp %.3f s, speedup %.2fx\n",
                t_scan_ser, t_scan_par, t_scan_ser / t_scan_par);
    return 0;
}
