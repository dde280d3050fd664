// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "hlnet/acceptance.hpp"

int main(int argc, char** argv) {
    hlnet::acceptance::Settings settings;
    if (argc > 1) {
        settings.workers = static_cast<unsigned>(std::stoul(argv[1]));
    }
    int failures = 0;
    for (const auto& criterion : hlnet::acceptance::all_criteria()) {
        const auto r = criterion(settings);
        std::printf("[%s] criterion %d: %s (%.2fs)\n       %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failures += r.pass ? 0 : 1;
    }
    std::printf("note: %s\n", hlnet::acceptance::kScopeNote);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
