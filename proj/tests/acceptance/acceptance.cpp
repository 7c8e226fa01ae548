// One line per acceptance criterion. Integer identities are exact; the time
// limits below are the only tolerances.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "trisect/verify.hpp"

using namespace trisect;

namespace {

constexpr long kExactTolerance = 0;

struct Limits {
    const char* suite;
    long min_cases;
    double max_seconds;
};

int failures = 0;

void line(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    if (!ok) ++failures;
}

void suite_criterion(int id, const std::string& what, const Limits& lim) {
    const SuiteResult r = run_suite(lim.suite, VerifyOptions{});
    const bool ok = r.passed && r.failure_count <= kExactTolerance && r.cases >= lim.min_cases &&
                    r.seconds < lim.max_seconds;
    std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failure_count) + " failures, " +
                         std::to_string(r.seconds) + " s of " + std::to_string(lim.max_seconds) + " s allowed";
    if (!r.failures.empty()) detail += "; first failure: " + r.failures.front();
    if (r.details.contains("coverage")) detail += "; coverage " + r.details["coverage"].dump();
    line(id, ok, what, detail);
}

int exit_status_of(const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
}

}  // namespace

int main() {
    suite_criterion(1, "adjunction identity on the model grid", {"adjunction-grid", 600, 1.0});
    suite_criterion(2, "trisection genus on product surfaces", {"product-genus", 300, 1.0});
    suite_criterion(3, "elm engine agrees with the blow-up lattice oracle", {"elm-oracle", 1000, 5.0});
    suite_criterion(4, "inverse of every random elm step is exact", {"invertibility", 1000, 10.0});
    suite_criterion(5, "resolution length bounds and minimal-degree shapes", {"resolution", 200, 30.0});
    suite_criterion(6, "threshold ordering and trigonal cross-check", {"bounds-ordering", 600, 5.0});
    suite_criterion(7, "h0 chain and construction minimum", {"h0-chain", 500, 5.0});
    suite_criterion(8, "construction plans verify for every degree in range", {"planner-roundtrip", 96, 10.0});

    const int fe = exit_status_of(std::string(TRISECT_FAULT_E_CLI) + " verify-paper --suite elm-oracle");
    const int fd = exit_status_of(std::string(TRISECT_FAULT_DELTA_CLI) + " verify-paper --suite resolution");
    line(9, fe == 1 && fd == 1, "mutants are caught by the oracle and resolution suites",
         "negated e update exits " + std::to_string(fe) + ", dropped delta decrement exits " + std::to_string(fd) +
             ", expected 1 and 1");

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
