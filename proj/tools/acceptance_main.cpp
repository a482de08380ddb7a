#include "motreal/verify/acceptance.hpp"

#include <cstring>
#include <iostream>

#ifndef MOTREAL_GOLDEN_DIR
#define MOTREAL_GOLDEN_DIR "tests/golden"
#endif

int main(int argc, char** argv) {
    motreal::verify::AcceptanceOptions options;
    options.golden_chart_path = std::string(MOTREAL_GOLDEN_DIR) + "/fig1_x8_y9.tsv";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            options.quick = true;
        } else if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc) {
            options.golden_chart_path = std::string(argv[++i]) + "/fig1_x8_y9.tsv";
        } else {
            std::cerr << "usage: acceptance [--quick] [--golden DIR]\n";
            return 2;
        }
    }
    const auto results = motreal::verify::run_acceptance(options);
    motreal::verify::print_results(std::cout, results);
    return motreal::verify::all_passed(results) ? 0 : 1;
}
