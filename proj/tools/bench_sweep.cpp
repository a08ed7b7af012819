// Benchmark: the candidate sweep's two screening implementations (the plain
// sigma-based reference and the bitmask kernel), serial and OpenMP, plus the
// LP certification throughput.
//
//   bench_sweep [--lp N]   (N = number of candidates to certify; default 256)

#include "tddel/tdsystem.hpp"
#include "tddel/witness.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

using namespace tddel;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    long lp_candidates = 256;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--lp") == 0 && i + 1 < argc)
            lp_candidates = std::atol(argv[++i]);

    const auto delta = sigma(counterexample_representation());
    const auto family = deduce_family(delta);
    const auto total = family_size(false);
    std::printf("candidate family: %llu candidates, %d workers available\n",
                static_cast<unsigned long long>(total), worker_count());

    // Reference screen: full representation construction + sigma comparison.
    auto start = std::chrono::steady_clock::now();
    std::uint64_t reference_matches = 0;
    for (std::uint64_t id = 0; id < total; ++id)
        if (sigma(build_candidate(family, id, false)) == delta) ++reference_matches;
    const double reference_time = seconds_since(start);
    std::printf("reference screen (serial): %8.2f ms  (%llu matches)\n",
                reference_time * 1e3, static_cast<unsigned long long>(reference_matches));

    // Kernel screen, serial.
    const CandidateScreen screen(delta, family, false);
    start = std::chrono::steady_clock::now();
    std::uint64_t kernel_matches = 0;
    for (std::uint64_t id = 0; id < total; ++id)
        if (screen.matches(id)) ++kernel_matches;
    const double kernel_time = seconds_since(start);
    std::printf("kernel screen    (serial): %8.2f ms  (%llu matches, %.1fx)\n",
                kernel_time * 1e3, static_cast<unsigned long long>(kernel_matches),
                reference_time / kernel_time);

    // Kernel screen through the parallel driver.
    start = std::chrono::steady_clock::now();
    const auto ids = screen.matching_ids();
    const double parallel_time = seconds_since(start);
    std::printf("kernel screen  (parallel): %8.2f ms  (%zu matches, %.1fx vs serial kernel)\n",
                parallel_time * 1e3, ids.size(), kernel_time / parallel_time);

    if (reference_matches != kernel_matches || ids.size() != kernel_matches) {
        std::printf("MISMATCH between screens\n");
        return 1;
    }

    // LP certification throughput on a prefix of the family.
    const long n = std::min<long>(lp_candidates, static_cast<long>(ids.size()));
    start = std::chrono::steady_clock::now();
    long certified = 0;
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count()) reduction(+ : certified)
    for (long i = 0; i < n; ++i) {
        const auto candidate = build_candidate(family, ids[static_cast<std::size_t>(i)], false);
        const auto certificate = find_multiflow(candidate);
        if (certificate && verify_multiflow(candidate, *certificate).certifies())
            ++certified;
    }
    const double lp_time = seconds_since(start);
    std::printf("multi-flow certification : %8.2f ms for %ld candidates (%.2f ms each; "
                "full sweep est. %.0f s)\n",
                lp_time * 1e3, n, lp_time * 1e3 / static_cast<double>(n),
                lp_time / static_cast<double>(n) * static_cast<double>(total));
    if (certified != n) {
        std::printf("certification failed for %ld candidates\n", n - certified);
        return 1;
    }
    return 0;
}
