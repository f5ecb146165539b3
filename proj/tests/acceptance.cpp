// Acceptance suite: groups the verification checks into the eight criteria
// and prints one PASS/FAIL line per criterion plus the failing sub-checks.
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "semigraphoid/semigraphoid.hpp"
#include "semigraphoid/verify.hpp"

namespace {

struct criterion {
    const char* label;
    const char* prefix;  // check-name prefix in the verification report
};

const criterion criteria[] = {
    {"1 counts-and-ranks", "counts/"},
    {"2 proposition-2.1", "prop21/"},
    {"3 n4-sweep-and-table", "sweep/"},
    {"4 theorem-3.1-coarsest", "thm31/"},
    {"5 polytope-f-vector-and-facets", "polytope/"},
    {"6 theorem-4.1-nonnormality", "thm41/"},
    {"7 markov-moves-and-primes", "markov/"},
    {"8 property-suites", "properties/"},
};

}  // namespace

int main(int argc, char** argv) {
    bool full = false;
    for (int a = 1; a < argc; ++a)
        if (std::strcmp(argv[a], "--full") == 0) full = true;
    int threads = sg::default_thread_count();

    sg::verification_report rep;
    try {
        rep = sg::run_paper_checks(full, threads);
    } catch (const std::exception& e) {
        std::cout << "FAIL suite-aborted: " << e.what() << "\n";
        return 1;
    }

    bool all_pass = true;
    for (const auto& cr : criteria) {
        int total = 0, passed = 0;
        std::vector<const sg::check_result*> failures;
        for (const auto& c : rep.checks) {
            if (c.name.rfind(cr.prefix, 0) != 0) continue;
            ++total;
            if (c.pass) ++passed;
            else failures.push_back(&c);
        }
        if (total == 0) {
            if (std::string(cr.prefix) == "sweep/" && !full) {
                std::cout << "SKIP " << cr.label << " (run with --full)\n";
                continue;
            }
            std::cout << "FAIL " << cr.label << " (no checks ran)\n";
            all_pass = false;
            continue;
        }
        bool ok = failures.empty();
        std::cout << (ok ? "PASS " : "FAIL ") << cr.label << " (" << passed << "/" << total
                  << " checks)\n";
        for (const auto* c : failures)
            std::cout << "      " << c->name << ": expected " << c->expected << ", got " << c->actual
                      << "\n";
        if (!ok) all_pass = false;
    }
    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
    return all_pass ? 0 : 1;
}
