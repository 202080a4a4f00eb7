#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gpav/perm.hpp"

using namespace gpav;

namespace {

// All permutations of 1..n, lexicographic.
std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// The 24 generalized 3-patterns: 6 letter orders x 4 dash layouts.
std::vector<GeneralizedPattern> all_gp3() {
    std::vector<GeneralizedPattern> out;
    for (const auto& p : all_perms(3))
        for (bool a0 : {false, true})
            for (bool a1 : {false, true})
                out.push_back(GeneralizedPattern(p, {a0, a1}));
    return out;
}

}  // namespace

TEST_CASE("pattern parsing") {
    auto p = GeneralizedPattern::parse("1-3-2");
    CHECK(p.letters == Permutation({1, 3, 2}));
    CHECK(p.adjacent == std::vector<bool>{false, false});
    CHECK(p.is_classical());

    auto q = GeneralizedPattern::parse("2-31");
    CHECK(q.letters == Permutation({2, 3, 1}));
    CHECK(q.adjacent == std::vector<bool>{false, true});

    auto r = GeneralizedPattern::parse("123");
    CHECK(r.adjacent == std::vector<bool>{true, true});
    CHECK(r.is_contiguous());

    CHECK(GeneralizedPattern::parse("12-3").str() == "12-3");
    CHECK(GeneralizedPattern::parse("1").str() == "1");

    CHECK_THROWS_AS(GeneralizedPattern::parse("1-"), parse_error);
    CHECK_THROWS_AS(GeneralizedPattern::parse("-12"), parse_error);
    CHECK_THROWS_AS(GeneralizedPattern::parse("1--2"), parse_error);
    CHECK_THROWS_AS(GeneralizedPattern::parse("11-2"), parse_error);
    CHECK_THROWS_AS(GeneralizedPattern::parse("1-3"), parse_error);  // missing 2
    CHECK_THROWS_AS(GeneralizedPattern::parse(""), parse_error);
    CHECK_THROWS_AS(GeneralizedPattern::parse("1x2"), parse_error);
    try {
        GeneralizedPattern::parse("1x2");
    } catch (const parse_error& e) {
        CHECK(e.pos == 1);
    }
}

TEST_CASE("permutation parsing and validation") {
    CHECK(Permutation::parse("45231") == Permutation({4, 5, 2, 3, 1}));
    CHECK(Permutation::parse("4 5 2 3 1") == Permutation({4, 5, 2, 3, 1}));
    CHECK(Permutation::parse("4,5,2,3,1") == Permutation({4, 5, 2, 3, 1}));
    CHECK(Permutation::parse("10 9 8 7 6 5 4 3 2 1").size() == 10);
    CHECK_THROWS(Permutation::parse("122"));
    CHECK_THROWS(Permutation::parse("13"));
    CHECK(Permutation().empty());
}

TEST_CASE("occurrence counting") {
    Permutation pi = Permutation::parse("516423");
    CHECK(occurrences(GeneralizedPattern::parse("2-31"), pi) == 1);
    CHECK(occurrences(GeneralizedPattern::parse("2-3-1"), pi) == 3);
    CHECK(occurrences(GeneralizedPattern::parse("123"), Permutation::parse("123456")) == 4);

    CHECK(avoids(GeneralizedPattern::parse("1-3-2"), Permutation::parse("21")));
    CHECK_FALSE(avoids(GeneralizedPattern::parse("123"), Permutation::parse("123")));
    CHECK(avoids(GeneralizedPattern::parse("1"), Permutation()));
}

TEST_CASE("occurrences ending at a position count only new completions") {
    auto p = GeneralizedPattern::parse("12-3");
    std::vector<int> w = {2, 3, 1, 4};
    std::int64_t incremental = 0;
    for (int d = 1; d <= (int)w.size(); ++d)
        incremental += occurrences_ending_at(p, std::span<const int>(w).first(d), d - 1);
    CHECK(incremental == occurrences(p, std::span<const int>(w)));
}

TEST_CASE("begin and end windows") {
    Permutation pi = Permutation::parse("45231");
    CHECK(begins_with(pi, Permutation::parse("12")));
    CHECK_FALSE(begins_with(pi, Permutation::parse("21")));
    CHECK(ends_with(pi, Permutation::parse("21")));

    Permutation one = Permutation::parse("1");
    CHECK(begins_with(one, one));
    CHECK(ends_with(one, one));
    CHECK_FALSE(begins_with(Permutation(), one));
    CHECK_FALSE(ends_with(Permutation(), one));
    CHECK_THROWS_AS(begins_with(pi, Permutation()), std::invalid_argument);

    // Windows may overlap: 12345 begins with 123 and ends with 1234.
    Permutation id5 = Permutation::identity(5);
    CHECK(begins_with(id5, Permutation::identity(3)));
    CHECK(ends_with(id5, Permutation::identity(4)));
}

TEST_CASE("trivial bijections on permutations") {
    Permutation pi = Permutation::parse("13254");
    CHECK(reverse(pi) == Permutation::parse("45231"));
    CHECK(complement(pi) == Permutation::parse("53412"));
    CHECK(reverse_complement(pi) == Permutation::parse("21435"));
}

TEST_CASE("trivial bijections on patterns") {
    auto p = GeneralizedPattern::parse("12-3");
    CHECK(reverse_complement(p).str() == "1-23");
    CHECK(reverse(p).str() == "3-21");
    CHECK(complement(p).str() == "32-1");
}

TEST_CASE("bijections preserve occurrence counts") {
    for (int n = 1; n <= 6; ++n) {
        auto perms = all_perms(n);
        for (const auto& p : all_gp3()) {
            auto rp = reverse(p);
            auto cp = complement(p);
            auto rcp = reverse_complement(p);
            for (const auto& pi : perms) {
                auto base = occurrences(p, pi);
                CHECK(base == occurrences(rp, reverse(pi)));
                CHECK(base == occurrences(cp, complement(pi)));
                CHECK(base == occurrences(rcp, reverse_complement(pi)));
            }
        }
    }
}

TEST_CASE("classical 3-patterns tile every triple") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& pi : all_perms(n)) {
            std::int64_t sum = 0;
            for (const auto& tau : all_perms(3))
                sum += occurrences(GeneralizedPattern::classical(tau), pi);
            CHECK(sum == (std::int64_t)(n * (n - 1) * (n - 2) / 6));
        }
    }
}

TEST_CASE("adding adjacency requirements only removes occurrences") {
    for (int n = 1; n <= 6; ++n) {
        auto perms = all_perms(n);
        for (const auto& base : all_perms(3)) {
            for (int weak = 0; weak < 4; ++weak) {
                for (int strong = 0; strong < 4; ++strong) {
                    if ((weak & strong) != weak) continue;  // weak flags subset of strong
                    GeneralizedPattern pw(base, {(weak & 1) != 0, (weak & 2) != 0});
                    GeneralizedPattern ps(base, {(strong & 1) != 0, (strong & 2) != 0});
                    for (const auto& pi : perms)
                        CHECK(occurrences(ps, pi) <= occurrences(pw, pi));
                }
            }
        }
    }
}

TEST_CASE("begins_with mirrors ends_with under reverse") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& pi : all_perms(n)) {
            for (int m = 1; m <= 3; ++m) {
                for (const auto& q : all_perms(m)) {
                    CHECK(begins_with(pi, q) == ends_with(reverse(pi), reverse(q)));
                }
            }
        }
    }
}
