// Wall-clock comparison of the OpenMP kernels against their serial references.
// Usage: kaccoh_bench [p] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include <fmt/format.h>

#include "kaccoh/cohomology/derivations.hpp"
#include "kaccoh/cohomology/scan.hpp"
#include "kaccoh/module/kac_module.hpp"

using namespace kaccoh;

namespace {

template <class F>
double best_of(int repeats, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double parallel, double serial, bool same)
{
    std::cout << fmt::format("{:<28} {:>10.2f} {:>10.2f} {:>8.2f}x  {}\n", name, parallel, serial, serial / parallel,
                             same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv)
{
    const std::int64_t p = argc > 1 ? std::atoll(argv[1]) : 13;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    const PrimeField f(p);
    std::cout << fmt::format("p={} threads={} repeats={}\n", p, omp_get_max_threads(), repeats);
    std::cout << fmt::format("{:<28} {:>10} {:>10} {:>9}\n", "kernel", "omp ms", "serial ms", "speedup");

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<Residue> entry(0, f.modulus() - 1);
    FpMatrix big(f, 640, 480);
    for (std::size_t r = 0; r < big.rows(); ++r)
        for (auto& x : big.row(r))
            x = entry(rng);
    RowEchelon e1{big, 0, {}}, e2{big, 0, {}};
    const double t_rref = best_of(repeats, [&] { e1 = rref(big); });
    const double t_rref_s = best_of(repeats, [&] { e2 = rref_serial(big); });
    row("rref 640x480", t_rref, t_rref_s, e1.reduced == e2.reduced);

    // largest module at this p
    const auto k = build_kac_module(p, 0, p - 1);
    const CochainLayout layout(k.module(), Parity::odd);
    FpMatrix s1(f, 0, 0), s2(f, 0, 0);
    const double t_sys = best_of(repeats, [&] { s1 = derivation_system(k.module(), layout); });
    const double t_sys_s = best_of(repeats, [&] { s2 = derivation_system_serial(k.module(), layout); });
    row(fmt::format("derivation system dim K={}", k.dim()).c_str(), t_sys, t_sys_s, s1 == s2);

    std::vector<ScanRow> r1, r2;
    const double t_scan = best_of(repeats, [&] { r1 = scan(p); });
    const double t_scan_s = best_of(repeats, [&] { r2 = scan_serial(p); });
    row(fmt::format("scan {}x{}", p, p).c_str(), t_scan, t_scan_s, r1 == r2);
    return r1 == r2 && s1 == s2 && e1.reduced == e2.reduced ? 0 : 1;
}
