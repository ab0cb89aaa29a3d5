#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affschur {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters shared by the verification suites. A value of 0 for n, r or bandwidth means the
// suite's own default range; max bounds components or degrees where a suite needs one.
struct SuiteConfig {
    int n = 0;
    int r = 0;
    int bandwidth = 0;
    int max = 0;
    std::vector<int> primes{11};  // extra primes for the Hall polynomial stability check
    unsigned seed = 1;
    int samples = 200;
};

struct SuiteReport {
    explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;  // every failing instance
    bool passed() const { return failures.empty(); }
    // Records one check; `describe` is only called on failure.
    void check(bool ok, const std::function<std::string()>& describe);
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// Worked examples: the monomial word of the finite upper triangular example, d_i = |Inv(i)| on
// random i, and the identity for rho when n = r = 2.
SuiteReport examples_suite(const SuiteConfig& cfg);

}  // namespace affschur
