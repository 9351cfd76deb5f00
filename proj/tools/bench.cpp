// Compares the serial reference kernels against the OpenMP ones on the two
// hot loops: exhaustive colouring enumeration and subset replay scans.

#include <chrono>
#include <cstdio>
#include <string>

#include "ramseykit/avoidance.hpp"
#include "ramseykit/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ramsey;

namespace {

double seconds(void (*task)(scan::Mode), scan::Mode mode, int repeats) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) task(mode);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count() / repeats;
}

void report(const char* name, void (*task)(scan::Mode), int repeats) {
    double serial = seconds(task, scan::Mode::serial, repeats);
    double parallel = seconds(task, scan::Mode::parallel, repeats);
    std::printf("%-44s %10.4fs %10.4fs %8.2fx\n", name, serial, parallel, serial / parallel);
}

void exhaustive_k6(scan::Mode mode) {
    auto g = Graph::complete(6);
    (void)scan::exhaustive_avoiding_colouring(g, 2, scan::AvoidTarget::clique(3),
                                              std::uint64_t{1} << 40, mode);
}

void exhaustive_k7(scan::Mode mode) {
    auto g = Graph::complete(7);
    (void)scan::exhaustive_avoiding_colouring(g, 2, scan::AvoidTarget::clique(3),
                                              std::uint64_t{1} << 40, mode);
}

void replay_k21(scan::Mode mode) {
    static const auto stepped = avoid::two_colour_step_up(avoid::known_colouring("paley17"));
    (void)scan::no_mono_clique(stepped.graph, stepped.colouring, 5, mode);
}

void replay_k19(scan::Mode mode) {
    static const auto stepped = avoid::multicolour_step_up(avoid::known_colouring("gf16_triple"));
    (void)scan::no_mono_clique(stepped.graph, stepped.colouring, 3, mode);
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";

#ifdef _OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not available (parallel mode falls back to serial)\n");
#endif
    std::printf("%-44s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    report("exhaustive colourings: K_6, r=2, K_3 (2^15)", exhaustive_k6, quick ? 1 : 3);
    if (!quick) report("exhaustive colourings: K_7, r=2, K_3 (2^21)", exhaustive_k7, 1);
    report("replay scan: K_21 step-up, K_5 (C(21,5))", replay_k21, quick ? 3 : 10);
    report("replay scan: K_19 step-up, K_3 x 4 colours", replay_k19, quick ? 3 : 10);
    return 0;
}
