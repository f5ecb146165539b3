#pragma once

#include <string>
#include <vector>

namespace sg {

struct check_result {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct verification_report {
    std::vector<check_result> checks;
    bool pass() const;
    void add(std::string name, std::string expected, std::string actual);
    template <typename T, typename U>
    void add_eq(std::string name, const T& expected, const U& actual) {
        add(std::move(name), std::to_string(expected), std::to_string(actual));
    }
};

// The reproduction suite.  Quick checks run always; `full` adds the n=4
// enumeration sweep and the classification table.
verification_report run_paper_checks(bool full, int threads);

std::string report_text(const verification_report& r);
std::string report_json(const verification_report& r);

}  // namespace sg
