// Compares the OpenMP search kernel against the serial reference on a
// larger enumeration than the test suite uses.

#include "bmetric/search.hpp"

#include <chrono>
#include <iostream>

using namespace bmetric;

namespace {

double time_run(const char* label, const std::function<std::vector<Counterexample>()>& run,
                std::size_t& count) {
    auto start = std::chrono::steady_clock::now();
    auto results = run();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    count = results.size();
    std::cout << label << ": " << elapsed << "s, " << count << " result(s)\n";
    return elapsed;
}

}  // namespace

int main(int argc, char** argv) {
    SearchConfig config;
    config.n = argc > 1 ? std::atoi(argv[1]) : 4;
    config.palette = {1, 2, 3, 6};
    config.k_candidates = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    config.r_candidates = {2, 4, 6, 7};
    config.max_results = 1000000;

    std::cout << "search n=" << config.n << ", palette size " << config.palette.size() << ", "
              << config.k_candidates.size() << " x " << config.r_candidates.size()
              << " parameter grid\n";

    std::size_t serial_count = 0, parallel_count = 0;
    double serial_s =
        time_run("serial  ", [&] { return find_counterexamples_serial(config); }, serial_count);
    double parallel_s =
        time_run("parallel", [&] { return find_counterexamples(config); }, parallel_count);

    if (serial_count != parallel_count) {
        std::cout << "MISMATCH: kernels disagree\n";
        return 1;
    }
    std::cout << "speedup: " << serial_s / parallel_s << "x\n";
    return 0;
}
