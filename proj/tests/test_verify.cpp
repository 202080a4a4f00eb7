#include <catch2/catch_amalgamated.hpp>

#include "gpav/record.hpp"
#include "gpav/verify.hpp"

using namespace gpav;

TEST_CASE("tables suite: one check per tabulated value, all passing") {
    Oracle oracle(Oracle::Config{.n_max = 10});
    verify::VerificationReport rep =
        verify::run(verify::Options{.suite = "tables"}, oracle);
    CHECK(rep.checks.size() == 33);
    CHECK(rep.passed == 33);
    CHECK(rep.failed == 0);
    CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    for (const auto& c : rep.checks) {
        CHECK(c.status == "pass");
        CHECK_FALSE(c.lhs.empty());
        CHECK_FALSE(c.rhs.empty());
    }
}

TEST_CASE("unknown suite is rejected") {
    Oracle oracle(Oracle::Config{.n_max = 10});
    CHECK_THROWS_AS(verify::run(verify::Options{.suite = "everything"}, oracle),
                    std::invalid_argument);
}

TEST_CASE("small-bound full run passes every suite") {
    Oracle oracle(Oracle::Config{.n_max = 10});
    verify::VerificationReport rep =
        verify::run(verify::Options{.suite = "all", .n_max = 6, .kl_max = 2}, oracle);
    CHECK(rep.failed == 0);
    CHECK(rep.passed == (int)rep.checks.size());
    // Every suite contributed.
    std::set<std::string> suites;
    for (const auto& c : rep.checks) suites.insert(c.suite);
    CHECK(suites == std::set<std::string>{"tables", "ogf", "egf", "lemmas", "section9"});
}

TEST_CASE("constant-term-only float sweep") {
    Oracle oracle(Oracle::Config{.n_max = 10});
    verify::VerificationReport rep =
        verify::run(verify::Options{.suite = "egf", .n_max = 0, .kl_max = 2}, oracle);
    CHECK(rep.failed == 0);  // empty coefficient ranges pass vacuously
}

TEST_CASE("sequence records round-trip through JSON") {
    SequenceRecord rec;
    rec.name = "contiguous pair 123&231";
    rec.spec = "avoid=123,231";
    rec.provenance = "recurrence";
    rec.values = {BigInt(1), BigInt(1), BigInt(2), BigInt("189540189540189540")};
    nlohmann::json j = to_json(rec);
    SequenceRecord back = record_from_json(j);
    CHECK(back == rec);
    // Values travel as decimal strings.
    CHECK(j["values"][3]["value"] == "189540189540189540");
    nlohmann::json reparsed = nlohmann::json::parse(j.dump());
    CHECK(record_from_json(reparsed) == rec);
}

TEST_CASE("malformed sequence JSON is rejected") {
    nlohmann::json j = {{"name", "x"},
                        {"spec", "s"},
                        {"provenance", "oracle"},
                        {"values", {{{"n", 2}, {"value", "7"}}}}};
    CHECK_THROWS_AS(record_from_json(j), std::invalid_argument);
}
