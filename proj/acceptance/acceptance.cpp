// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "affschur/suites.hpp"

using namespace affschur;

namespace {

struct Criterion {
    std::string title;
    std::vector<std::string> suites;
    double limit_seconds;  // 0 when the criterion has no time bound
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"cross-engine agreement of BLM formulas with the oracle", {"oracle-vs-blm"}, 300},
        {"polynomial identity P = P'", {"polyidentity"}, 60},
        {"Hall polynomials: stability, associativity, semisimple products", {"hall-assoc"}, 600},
        {"central elements z_1 and c_1", {"central"}, 0},
        {"Hopf structure and Green pairing", {"hopf", "pairing"}, 0},
        {"triangular decomposition", {"pbw"}, 0},
        {"presentations", {"presentation", "rho-nr"}, 0},
        {"commutator relations", {"commutator"}, 0},
        {"tensor space bimodule", {"tensor-bimodule"}, 0},
        {"classical multiplication formulas and realization", {"classical-mf", "classical-realization"}, 600},
        {"worked examples", {"examples"}, 0},
    };
    SuiteConfig cfg;
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& c = criteria[k];
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        long checked = 0;
        std::vector<std::string> failures;
        for (const auto& s : c.suites) {
            SuiteReport rep = run_suite(s, cfg);
            checked += rep.checked;
            ok = ok && rep.passed();
            for (const auto& f : rep.failures) failures.push_back(s + ": " + f);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
        ok = ok && in_time;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << k + 1 << ": " << c.title << " ("
                  << checked << " checks, " << std::fixed << std::setprecision(1) << secs << "s";
        if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << "s";
        std::cout << ")\n";
        for (std::size_t f = 0; f < failures.size() && f < 10; ++f) std::cout << "      " << failures[f] << "\n";
        if (failures.size() > 10) std::cout << "      ... " << failures.size() - 10 << " more\n";
        if (!in_time) std::cout << "      time limit exceeded\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
