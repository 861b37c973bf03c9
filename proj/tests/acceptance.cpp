// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion.  Exit code 0 when everything passes.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "relgadget/verify.hpp"

int main(int argc, char** argv) {
    unsigned seed = 1;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = static_cast<unsigned>(std::atoi(argv[++i]));
        else if (std::strcmp(argv[i], "--verbose") == 0)
            verbose = true;
    }
    auto log = verbose ? relgadget::verify::LogFn([](const std::string& line) {
        std::printf("  %s\n", line.c_str());
    })
                       : relgadget::verify::LogFn();
    auto results = relgadget::verify::run_suite("all", seed, log);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%-4s %-22s %-4s %6lld instances  %7.2fs%s%s\n", r.id.c_str(),
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.instances, r.seconds,
                    r.pass ? "" : "  first failure: ", r.pass ? "" : r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return ok ? 0 : 3;
}
