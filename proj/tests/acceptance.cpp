// Acceptance gate: one line per criterion with its wall-clock time and a
// pass/fail verdict; exits nonzero when any criterion fails or overruns
// its time budget.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "opext/enumerate.hpp"
#include "opext/tiltkit.hpp"
#include "opext/verify.hpp"

using namespace opext;

namespace {

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::vector<std::string> suites;
    int count = 100;
};

bool f2_enumeration_counts_match() {
    struct Row {
        const char* name;
        std::size_t tilting, stt;
    };
    for (auto& row : std::vector<Row>{{"a2", 2, 5}, {"a3", 5, 14}}) {
        auto alg = corpus::algebra(row.name, Field::prime(2));
        auto indecs = enumerate_indecomposables(alg, 12);
        if (enumerate_tilting(alg, indecs, TiltingMode::DefBBOS, 1).size() != row.tilting)
            return false;
        if (enumerate_stt(alg, indecs, SttMode::Def61, 1).size() != row.stt) return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "extension-vertex structure", 1.0, {"structural"}},
        {2, "canonical sequences and unit criteria", 5.0, {"lemma2.2", "lemma2.5"}},
        {3, "ext transport", 30.0, {"prop2"}},
        {4, "enumeration counts", 60.0, {"counts"}},
        {5, "definition equivalences", 120.0, {"defequiv"}},
        {6, "object transport", 120.0,
         {"transport-tilting", "transport-stt", "silting-restriction", "quasi-tilting",
          "cosilting"}},
        {7, "triple bijection and transport", 120.0, {"triples"}},
        {8, "brute-force oracles", 120.0, {"oracles"}},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        try {
            for (auto& suite : c.suites) {
                auto report = run_suite(suite, 1, c.count);
                if (!report.ok()) {
                    pass = false;
                    detail += (detail.empty() ? "" : "; ") + report.summary();
                }
            }
            if (c.id == 4 && !f2_enumeration_counts_match()) {
                pass = false;
                detail += (detail.empty() ? "" : "; ") + std::string("F_2 counts diverge");
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        if (!pass) ++failures;
        std::printf("criterion %d (%s): %s  [%.2fs / budget %.0fs]%s%s\n", c.id, c.label.c_str(),
                    pass ? "pass" : "FAIL", secs, c.budget_seconds, detail.empty() ? "" : "  -- ",
                    detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
