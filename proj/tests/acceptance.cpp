// Acceptance gate: runs the complete identity registry at the shipped
// bounds and prints one PASS/FAIL line per criterion. Exits nonzero when
// anything fails, so the suite doubles as a CI gate.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gpav/verify.hpp"

using namespace gpav;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(const verify::CheckResult&)> member;
    bool require_nonempty = true;
};

bool starts_with(const std::string& s, const std::string& p) {
    return s.rfind(p, 0) == 0;
}

}  // namespace

int main() {
    auto wall = [] { return std::chrono::steady_clock::now(); };
    auto t0 = wall();

    Oracle oracle(Oracle::Config{.n_max = 10});

    // Criterion 1 carries its own runtime bound, so time the tables suite
    // separately before the full run.
    auto tables_start = wall();
    verify::VerificationReport tables =
        verify::run(verify::Options{.suite = "tables"}, oracle);
    double tables_seconds =
        std::chrono::duration<double>(wall() - tables_start).count();

    verify::VerificationReport rep =
        verify::run(verify::Options{.suite = "all", .n_max = 10, .kl_max = 3}, oracle);

    std::vector<Criterion> criteria = {
        {"1: pair-class tables, recurrence and oracle, n <= 10",
         [](const verify::CheckResult& c) { return starts_with(c.id, "tables/"); }},
        {"2: begin-12/end-123 spot value 2002, series and oracle",
         [](const verify::CheckResult& c) { return c.id == "ogf/window-spot-2002"; }},
        {"3: exact generating functions vs oracle, with two-window extractions",
         [](const verify::CheckResult& c) {
             return starts_with(c.id, "ogf/") && c.id != "ogf/window-spot-2002" &&
                    c.id != "ogf/catalan-functional-equation" &&
                    c.id != "ogf/catalan-square-identity";
         }},
        {"4: one- and two-sided 1-2-3 counting formulas vs oracle, n <= 9",
         [](const verify::CheckResult& c) {
             return starts_with(c.id, "lemmas/one-sided/") ||
                    starts_with(c.id, "lemmas/two-sided/") ||
                    starts_with(c.id, "lemmas/first-letter-") ||
                    c.id == "lemmas/neighbour-swap";
         }},
        {"5: float generating functions vs oracle under the rounding contract",
         [](const verify::CheckResult& c) {
             return (starts_with(c.id, "egf/") && !starts_with(c.id, "egf/recurrence/")) ||
                    starts_with(c.id, "section9/double-avoidance/");
         }},
        {"6: exactly-once identities vs oracle, n = 3..9",
         [](const verify::CheckResult& c) {
             return starts_with(c.id, "section9/exactly-once/") ||
                    c.id == "section9/occurrence-partition";
         }},
        {"7: window recurrences with oracle bases vs oracle, n <= 9",
         [](const verify::CheckResult& c) { return starts_with(c.id, "egf/recurrence/"); }},
        {"8: structural properties (bijections, triple sum, avoider sets, Catalan)",
         [](const verify::CheckResult& c) {
             return c.id == "lemmas/bijection-occurrences" ||
                    c.id == "lemmas/classical-triple-sum" ||
                    c.id == "lemmas/flag-monotonicity" ||
                    c.id == "lemmas/avoider-sets-2-13" ||
                    c.id == "lemmas/rc-class-sizes" ||
                    c.id == "lemmas/rc-window-transport" ||
                    c.id == "ogf/catalan-functional-equation" ||
                    c.id == "ogf/catalan-square-identity";
         }},
    };

    int failures = 0;
    int claimed = 0;
    for (const auto& crit : criteria) {
        int total = 0, bad = 0;
        std::string first_failure;
        for (const auto& c : rep.checks) {
            if (!crit.member(c)) continue;
            ++total;
            if (c.status != "pass") {
                ++bad;
                if (first_failure.empty())
                    first_failure = c.id + " [" + c.lhs + " vs " + c.rhs + "]";
            }
        }
        claimed += total;
        bool ok = bad == 0 && total > 0;
        if (crit.label[0] == '1') {
            ok = ok && tables.passed == 33 && tables.failed == 0 && tables_seconds < 60.0;
            if (tables_seconds >= 60.0) first_failure = "tables suite exceeded 60s";
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << crit.label << " ("
                  << total << " checks";
        if (crit.label[0] == '1')
            std::cout << ", " << tables_seconds << "s";
        std::cout << ")";
        if (!ok && !first_failure.empty()) std::cout << "  first failure: " << first_failure;
        std::cout << "\n";
    }

    if (claimed != (int)rep.checks.size()) {
        std::cout << "FAIL criterion coverage: " << claimed << " of " << rep.checks.size()
                  << " checks mapped\n";
        ++failures;
    }

    double total_seconds = std::chrono::duration<double>(wall() - t0).count();
    std::cout << "acceptance: " << rep.checks.size() << " registry checks, "
              << (failures == 0 ? "all criteria pass" : "FAILURES PRESENT") << ", "
              << total_seconds << "s total\n";
    return failures == 0 ? 0 : 1;
}
