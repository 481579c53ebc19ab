// Benchmark: the OpenMP McKay-matrix kernel against the serial dense-rational
// reference, on character tables of increasing size. Both routes must agree
// entry for entry; the reference is skipped above --max-ref vertices.

#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "mckay/quiver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mckay;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"McKay-matrix kernel benchmark"};
    std::vector<std::string> specs = {"D(4,1)", "P(2)", "D(3,1)xC(5)", "P(2)xC(5)", "P(2)xC(7)"};
    int reps = 3;
    int max_ref = 110;
    app.add_option("--spec", specs, "specs to benchmark");
    app.add_option("--reps", reps, "kernel repetitions per spec");
    app.add_option("--max-ref", max_ref, "largest vertex count for the serial reference");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif
    std::cout << std::left << std::setw(14) << "spec" << std::right << std::setw(10) << "vertices"
              << std::setw(14) << "kernel ms" << std::setw(14) << "serial ms" << std::setw(10)
              << "speedup" << std::setw(9) << "match" << "\n";

    bool all_match = true;
    for (const auto& text : specs) {
        GroupSpec spec = GroupSpec::parse(text);
        auto table = character_table(spec);
        Character nat = natural_character(spec);

        auto start = Clock::now();
        std::vector<std::vector<long long>> fast;
        for (int r = 0; r < reps; ++r) fast = mckay_matrix(*table, nat);
        double fast_ms = ms_since(start) / reps;

        double ref_ms = -1;
        bool match = true;
        if (table->num_irreps() <= max_ref) {
            start = Clock::now();
            auto ref = mckay_matrix_reference(*table, nat);
            ref_ms = ms_since(start);
            match = ref == fast;
            all_match = all_match && match;
        }

        std::cout << std::left << std::setw(14) << text << std::right << std::setw(10)
                  << table->num_irreps() << std::setw(14) << std::fixed << std::setprecision(2)
                  << fast_ms;
        if (ref_ms >= 0)
            std::cout << std::setw(14) << ref_ms << std::setw(10) << std::setprecision(1)
                      << ref_ms / fast_ms << std::setw(9) << (match ? "yes" : "NO");
        else
            std::cout << std::setw(14) << "-" << std::setw(10) << "-" << std::setw(9) << "-";
        std::cout << "\n";
    }
    return all_match ? 0 : 1;
}
