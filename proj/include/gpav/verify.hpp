#pragma once

// The identity registry: every closed form, recurrence and structural
// property in the library checked against the enumeration oracle (or
// against exact algebra where no enumeration is needed). Checks are grouped
// into the suites the command line exposes:
//
//   tables    reference tables for the contiguous pair classes, three ways
//   ogf       exact generating functions, Catalan algebra, window spot values
//   egf       float generating functions and the convolution recurrences
//   lemmas    the 1-2-3 counting formulas, their tables, core properties
//   section9  double avoidance and exactly-once identities
//
// Each registered identity appears exactly once per run and failures always
// carry the two compared values.

#include <array>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gpav/counting.hpp"
#include "gpav/oracle.hpp"
#include "gpav/perm.hpp"
#include "gpav/series.hpp"

namespace gpav::verify {

struct CheckResult {
    std::string id;
    std::string suite;
    std::string status;  // pass | fail | skipped
    std::string lhs;
    std::string rhs;
    std::string location;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    double seconds = 0.0;
};

struct Options {
    std::string suite = "all";
    int n_max = 9;   // bound for oracle-backed family sweeps
    int kl_max = 3;  // bound for window lengths
};

namespace detail {

class Runner {
public:
    Runner(const Options& opts, Oracle& oracle) : opts_(opts), oracle_(oracle) {}

    VerificationReport take() {
        std::sort(report_.checks.begin(), report_.checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
        return std::move(report_);
    }

    bool wants(const std::string& suite) const {
        return opts_.suite == "all" || opts_.suite == suite;
    }

    // fn returns true and fills lhs/rhs on success; on failure fills the
    // first disagreeing pair.
    void check(const std::string& suite, const std::string& id, const std::string& location,
               const std::function<bool(std::string&, std::string&)>& fn) {
        if (!wants(suite)) return;
        if (!seen_.insert(id).second)
            throw std::logic_error("duplicate check id: " + id);
        CheckResult r;
        r.id = id;
        r.suite = suite;
        r.location = location;
        bool ok = false;
        try {
            ok = fn(r.lhs, r.rhs);
        } catch (const std::exception& e) {
            r.lhs = std::string("error: ") + e.what();
            r.rhs = "(exception)";
            ok = false;
        }
        r.status = ok ? "pass" : "fail";
        (ok ? report_.passed : report_.failed)++;
        report_.checks.push_back(std::move(r));
    }

    const Options& opts() const { return opts_; }
    Oracle& oracle() { return oracle_; }

private:
    Options opts_;
    Oracle& oracle_;
    VerificationReport report_;
    std::set<std::string> seen_;
};

inline std::vector<Permutation> perms_of(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// --- tables ------------------------------------------------------------------

inline void register_tables(Runner& r) {
    struct Entry {
        const char* id;
        std::array<long long, 11> values;
    };
    static const Entry entries[] = {
        {"123&231", {1, 1, 2, 4, 11, 39, 161, 784, 4368, 27260, 189540}},
        {"132&213", {1, 1, 2, 4, 11, 37, 149, 705, 3814, 23199, 156940}},
        {"132&312", {1, 1, 2, 4, 10, 30, 108, 454, 2186, 11840, 71254}},
    };
    for (const auto& e : entries) {
        SequenceRecord rec = counting::pair_avoidance(e.id, 10);
        for (int n = 0; n <= 10; ++n) {
            std::string id = std::string("tables/") + e.id + "/n=" +
                             (n < 10 ? "0" : "") + std::to_string(n);
            r.check("tables", id, "pair table value, recurrence and oracle",
                    [&, n](std::string& lhs, std::string& rhs) {
                        BigInt expected(e.values[n]);
                        rhs = expected.str();
                        lhs = rec.values[n].str();
                        if (rec.values[n] != expected) return false;
                        std::string a(e.id, 3), b(e.id + 4);
                        ConstraintSpec spec;
                        spec.avoid = {GeneralizedPattern::parse(a),
                                      GeneralizedPattern::parse(b)};
                        BigInt direct = r.oracle().count(spec, n);
                        if (direct != expected) {
                            lhs = direct.str();
                            return false;
                        }
                        return true;
                    });
        }
    }
}

// --- exact generating functions ------------------------------------------------

inline void register_ogf(Runner& r) {
    using namespace gpav::series;
    r.check("ogf", "ogf/catalan-functional-equation", "C(x)(1 - xC(x)) = 1, order 24",
            [](std::string& lhs, std::string& rhs) {
                RationalSeries C = catalan_series(24);
                RationalSeries p =
                    C * (RationalSeries::constant(BigRat(1), 24) - C.shifted(1));
                for (int i = 0; i < 24; ++i) {
                    BigRat want(i == 0 ? 1 : 0);
                    if (p[i] != want) {
                        lhs = p[i].str();
                        rhs = want.str();
                        return false;
                    }
                }
                lhs = rhs = "1";
                return true;
            });
    r.check("ogf", "ogf/catalan-square-identity", "xC^2(x) = C(x) - 1, order 24",
            [](std::string& lhs, std::string& rhs) {
                RationalSeries C = catalan_series(24);
                RationalSeries a = C.pow(2).shifted(1);
                RationalSeries b = C - RationalSeries::constant(BigRat(1), 24);
                for (int i = 0; i < 24; ++i)
                    if (a[i] != b[i]) {
                        lhs = a[i].str();
                        rhs = b[i].str();
                        return false;
                    }
                lhs = rhs = "equal";
                return true;
            });
    r.check("ogf", "ogf/window-spot-2002",
            "coefficient of x^10 in x^4 C^4(x); begin 12 end 123 avoiding 1-3-2",
            [&](std::string& lhs, std::string& rhs) {
                RationalSeries s = catalan_series(12).pow(4).shifted(4);
                BigInt coeff = counts_from_series(s, 10);
                lhs = coeff.str();
                rhs = "2002";
                if (coeff != 2002) return false;
                ConstraintSpec spec;
                spec.avoid = {GeneralizedPattern::parse("1-3-2")};
                spec.begin = Permutation::parse("12");
                spec.end = Permutation::parse("123");
                BigInt direct = r.oracle().count(spec, 10);
                if (direct != 2002) {
                    lhs = direct.str();
                    return false;
                }
                return true;
            });

    const int n_hi = std::min(10, r.opts().n_max);
    auto family_check = [&](const std::string& id, const std::string& pat, bool two_sided) {
        auto f = parse_family(id);
        std::vector<GeneralizedPattern> av{GeneralizedPattern::parse(pat)};
        for (int k = 1; k <= r.opts().kl_max; ++k) {
            for (int l = 1; l <= (two_sided ? r.opts().kl_max : 1); ++l) {
                std::ostringstream cid;
                cid << "ogf/" << id << "/k=" << k;
                if (two_sided) cid << ",l=" << l;
                r.check("ogf", cid.str(), "series coefficients vs oracle counts",
                        [&, k, l, f, av](std::string& lhs, std::string& rhs) {
                            RationalSeries s = ogf_formula(id, k, l, n_hi + 1);
                            for (int n = 0; n <= n_hi; ++n) {
                                BigInt want = n == 0 ? BigInt(0)
                                              : two_sided
                                                  ? r.oracle().monotone_count(av, f.bd, k,
                                                                              f.ed, l, n)
                                                  : r.oracle().monotone_count(
                                                        av, f.bd, k, Dir::inc, 1, n);
                                BigInt got = counts_from_series(s, n);
                                if (got != want) {
                                    lhs = got.str();
                                    rhs = want.str() + " (n=" + std::to_string(n) + ")";
                                    return false;
                                }
                            }
                            lhs = rhs = "agree to n=" + std::to_string(n_hi);
                            return true;
                        });
            }
        }
    };
    for (const char* pat : {"1-3-2", "2-1-3", "2-13", "13-2"})
        for (const char* d : {"inc,inc", "inc,dec", "dec,inc", "dec,dec"})
            family_check(std::string(pat) + ":" + d, pat, true);
    family_check("1-3-2:inc", "1-3-2", false);
    family_check("1-3-2:dec", "1-3-2", false);
    family_check("2-1-3:inc", "2-1-3", false);
    family_check("2-1-3:dec", "2-1-3", false);
    family_check("1-2-3:inc", "1-2-3", false);

    // The shared two-window generating function reproduces the per-window
    // closed forms to order 16 for window lengths up to 4.
    for (const char* pat : {"1-3-2", "2-1-3", "2-13", "13-2"}) {
        std::string dir = (std::string(pat) == "1-3-2" || std::string(pat) == "13-2")
                              ? "dec,inc"
                              : "inc,dec";
        for (int k = 1; k <= 4; ++k) {
            for (int l = 1; l <= 4; ++l) {
                std::ostringstream cid;
                cid << "ogf/two-window-extraction/" << pat << "/k=" << k << ",l=" << l;
                r.check("ogf", cid.str(),
                        "coefficient of y^k z^l vs the per-window closed form, order 16",
                        [&, pat, dir, k, l](std::string& lhs, std::string& rhs) {
                            RationalSeries a = trivariate_coeff(pat, k, l, 16);
                            RationalSeries b =
                                ogf_formula(std::string(pat) + ":" + dir, k, l, 16);
                            for (int n = 0; n < 16; ++n)
                                if (a[n] != b[n]) {
                                    lhs = a[n].str();
                                    rhs = b[n].str() + " (n=" + std::to_string(n) + ")";
                                    return false;
                                }
                            lhs = rhs = "agree to order 16";
                            return true;
                        });
            }
        }
    }
}

// --- float generating functions and recurrences --------------------------------

// A fixed zero-constant probe series for the differentiate/integrate check.
inline gpav::series::FloatSeries detail_series_probe() {
    using namespace gpav::series;
    return float_transcendental(Transcendental::exp, 1.0, 0.0, 16) -
           FloatSeries::constant(1.0, 16);
}

inline void register_egf(Runner& r) {
    using namespace gpav::series;
    const int n_hi = std::min(10, r.opts().n_max);
    auto family_check = [&](const std::string& id, std::vector<GeneralizedPattern> av) {
        auto f = parse_family(id);
        for (int k = 1; k <= r.opts().kl_max; ++k) {
            for (int l = 1; l <= r.opts().kl_max; ++l) {
                if (!has_egf(id, k, l)) continue;
                std::ostringstream cid;
                cid << "egf/" << id << "/k=" << k << ",l=" << l;
                r.check("egf", cid.str(),
                        "n! times series coefficient vs oracle, rounding contract",
                        [&, id, k, l, f, av](std::string& lhs, std::string& rhs) {
                            FloatSeries s = egf_formula(
                                id, k, l, std::min(std::max(n_hi + 1, 2), float_order_cap));
                            for (int n = 0; n <= n_hi && n < s.order(); ++n) {
                                BigInt want =
                                    n == 0 ? BigInt(0)
                                           : r.oracle().monotone_count(av, f.bd, k, f.ed, l,
                                                                       n);
                                BigInt got = counts_from_series(s, n);
                                if (got != want) {
                                    lhs = got.str();
                                    rhs = want.str() + " (n=" + std::to_string(n) + ")";
                                    return false;
                                }
                            }
                            lhs = rhs = "agree to n=" + std::to_string(n_hi);
                            return true;
                        });
            }
        }
    };
    for (const char* pat : {"123", "1-32", "21-3", "1-23", "12-3"})
        for (const char* d : {"inc,inc", "inc,dec", "dec,inc", "dec,dec"})
            family_check(std::string(pat) + ":" + d,
                         {GeneralizedPattern::parse(pat)});

    r.check("egf", "egf/differentiate-integrate-identity",
            "integral of derivative restores a zero-constant series, order 16",
            [](std::string& lhs, std::string& rhs) {
                FloatSeries f = detail_series_probe();
                FloatSeries back = f.differentiated().integrated();
                double worst = 0;
                for (int i = 0; i < std::min(back.order(), f.order()); ++i)
                    worst = std::max(worst, std::abs(back[i] - f[i]));
                lhs = std::to_string(worst);
                rhs = "< 1e-12";
                return worst < 1e-12;
            });

    // Convolution recurrences with oracle-fed bases.
    const int rec_hi = std::min(9, r.opts().n_max);
    counting::OracleBaseProvider base(r.oracle());
    auto rec = std::make_shared<counting::TwoSidedRecurrences>(base, rec_hi);
    for (const char* pat : {"213", "132", "123", "1-32", "21-3", "1-23", "12-3"}) {
        for (Dir bd : {Dir::inc, Dir::dec}) {
            for (Dir ed : {Dir::inc, Dir::dec}) {
                if (!counting::TwoSidedRecurrences::covered(pat, bd, ed)) continue;
                for (int k = 1; k <= r.opts().kl_max; ++k) {
                    for (int l = 1; l <= r.opts().kl_max; ++l) {
                        std::ostringstream cid;
                        cid << "egf/recurrence/" << pat << ":" << dir_name(bd) << ","
                            << dir_name(ed) << "/k=" << k << ",l=" << l;
                        r.check("egf", cid.str(), "window recurrence vs oracle",
                                [&, pat, bd, ed, k, l, rec](std::string& lhs,
                                                            std::string& rhs) {
                                    const auto& v = rec->get(pat, bd, k, ed, l);
                                    auto p = GeneralizedPattern::parse(pat);
                                    for (int n = 0; n <= rec_hi; ++n) {
                                        BigInt want =
                                            n == 0 ? BigInt(0)
                                                   : r.oracle().monotone_count({p}, bd, k,
                                                                               ed, l, n);
                                        if (v[n] != want) {
                                            lhs = v[n].str();
                                            rhs = want.str() + " (n=" + std::to_string(n) +
                                                  ")";
                                            return false;
                                        }
                                    }
                                    lhs = rhs = "agree to n=" + std::to_string(rec_hi);
                                    return true;
                                });
                    }
                }
            }
        }
    }
}

// --- 1-2-3 formulas and structural properties ----------------------------------

inline void register_lemmas(Runner& r) {
    const int n_hi = std::min(9, r.opts().n_max);
    r.check("lemmas", "lemmas/first-letter-row-sums",
            "first-letter counts sum to Catalan numbers, n <= 10",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 1; n <= 10; ++n) {
                    BigInt total = 0;
                    for (int t = 1; t <= n; ++t)
                        total += counting::count_123_by_first_letter(n, t);
                    if (total != catalan(n)) {
                        lhs = total.str();
                        rhs = catalan(n).str() + " (n=" + std::to_string(n) + ")";
                        return false;
                    }
                }
                lhs = rhs = "rows sum to C_n";
                return true;
            });
    r.check("lemmas", "lemmas/first-letter-boundary",
            "top two first letters both count C_{n-1}",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 2; n <= 10; ++n) {
                    BigInt a = counting::count_123_by_first_letter(n, n);
                    BigInt b = counting::count_123_by_first_letter(n, n - 1);
                    if (a != catalan(n - 1) || b != catalan(n - 1)) {
                        lhs = a.str() + "/" + b.str();
                        rhs = catalan(n - 1).str();
                        return false;
                    }
                }
                lhs = rhs = "boundary holds";
                return true;
            });

    std::vector<GeneralizedPattern> av{GeneralizedPattern::parse("1-2-3")};
    for (Dir d : {Dir::inc, Dir::dec}) {
        for (int k = 1; k <= r.opts().kl_max; ++k) {
            std::ostringstream cid;
            cid << "lemmas/one-sided/" << dir_name(d) << "/k=" << k;
            r.check("lemmas", cid.str(), "one-sided 1-2-3 count vs oracle",
                    [&, d, k](std::string& lhs, std::string& rhs) {
                        for (int n = 0; n <= n_hi; ++n) {
                            BigInt want = n == 0 ? BigInt(0)
                                                 : r.oracle().monotone_count(av, d, k,
                                                                             Dir::inc, 1, n);
                            BigInt got = counting::count_123_begin(n, d, k);
                            if (got != want) {
                                lhs = got.str();
                                rhs = want.str() + " (n=" + std::to_string(n) + ")";
                                return false;
                            }
                        }
                        lhs = rhs = "agree to n=" + std::to_string(n_hi);
                        return true;
                    });
        }
    }
    for (Dir bd : {Dir::inc, Dir::dec}) {
        for (Dir ed : {Dir::inc, Dir::dec}) {
            for (int k = 1; k <= r.opts().kl_max; ++k) {
                for (int l = 1; l <= r.opts().kl_max; ++l) {
                    std::ostringstream cid;
                    cid << "lemmas/two-sided/" << dir_name(bd) << "," << dir_name(ed)
                        << "/k=" << k << ",l=" << l;
                    r.check("lemmas", cid.str(), "two-sided 1-2-3 count vs oracle",
                            [&, bd, ed, k, l](std::string& lhs, std::string& rhs) {
                                for (int n = 0; n <= n_hi; ++n) {
                                    BigInt want =
                                        n == 0 ? BigInt(0)
                                               : r.oracle().monotone_count(av, bd, k, ed, l,
                                                                           n);
                                    BigInt got =
                                        counting::count_123_two_sided(n, bd, ed, k, l);
                                    if (got != want) {
                                        lhs = got.str();
                                        rhs = want.str() + " (n=" + std::to_string(n) + ")";
                                        return false;
                                    }
                                }
                                lhs = rhs = "agree to n=" + std::to_string(n_hi);
                                return true;
                            });
                }
            }
        }
    }

    r.check("lemmas", "lemmas/neighbour-swap",
            "boundary-ends table symmetric in neighbouring values (separated windows)",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 2; n <= 8; ++n)
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; k + l <= n && l <= 3; ++l)
                            for (int t = 1; t < n; ++t) {
                                BigInt a = counting::count_123_dec_ends(n, k, l, t, t + 1);
                                BigInt b = counting::count_123_dec_ends(n, k, l, t + 1, t);
                                if (a != b) {
                                    lhs = a.str();
                                    rhs = b.str();
                                    return false;
                                }
                            }
                lhs = rhs = "symmetric";
                return true;
            });

    r.check("lemmas", "lemmas/bijection-occurrences",
            "reverse/complement preserve occurrence counts, n <= 7",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 1; n <= 7; ++n) {
                    for (const auto& pi : perms_of(n)) {
                        for (const auto& tau : perms_of(3)) {
                            for (int mask = 0; mask < 4; ++mask) {
                                GeneralizedPattern p(tau, {(mask & 1) != 0, (mask & 2) != 0});
                                auto a = occurrences(p, pi);
                                if (a != occurrences(reverse(p), reverse(pi)) ||
                                    a != occurrences(complement(p), complement(pi))) {
                                    lhs = "occurrence mismatch";
                                    rhs = p.str() + " on " + pi.str();
                                    return false;
                                }
                            }
                        }
                    }
                }
                lhs = rhs = "preserved";
                return true;
            });

    r.check("lemmas", "lemmas/classical-triple-sum",
            "the six classical 3-patterns tile every triple, n <= 7",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 0; n <= 7; ++n) {
                    for (const auto& pi : perms_of(n)) {
                        std::int64_t sum = 0;
                        for (const auto& tau : perms_of(3))
                            sum += occurrences(GeneralizedPattern::classical(tau), pi);
                        std::int64_t want = (std::int64_t)n * (n - 1) * (n - 2) / 6;
                        if (sum != want) {
                            lhs = std::to_string(sum);
                            rhs = std::to_string(want);
                            return false;
                        }
                    }
                }
                lhs = rhs = "binom(n,3)";
                return true;
            });

    r.check("lemmas", "lemmas/flag-monotonicity",
            "adding adjacency flags never adds occurrences, n <= 7",
            [&](std::string& lhs, std::string& rhs) {
                for (int n = 1; n <= 7; ++n) {
                    for (const auto& pi : perms_of(n)) {
                        for (const auto& tau : perms_of(3)) {
                            std::int64_t weakest = occurrences(
                                GeneralizedPattern::classical(tau), pi);
                            for (int mask = 1; mask < 4; ++mask) {
                                GeneralizedPattern p(tau, {(mask & 1) != 0, (mask & 2) != 0});
                                if (occurrences(p, pi) > weakest) {
                                    lhs = "flagged count exceeds classical";
                                    rhs = p.str() + " on " + pi.str();
                                    return false;
                                }
                            }
                        }
                    }
                }
                lhs = rhs = "monotone";
                return true;
            });

    r.check("lemmas", "lemmas/avoider-sets-2-13",
            "avoiding 2-13 and avoiding 2-1-3 give the same sets, n <= 8",
            [&](std::string& lhs, std::string& rhs) {
                auto a = GeneralizedPattern::parse("2-13");
                auto b = GeneralizedPattern::parse("2-1-3");
                for (int n = 0; n <= 8; ++n)
                    for (const auto& pi : perms_of(n))
                        if (avoids(a, pi) != avoids(b, pi)) {
                            lhs = pi.str();
                            rhs = "avoider status differs";
                            return false;
                        }
                lhs = rhs = "identical avoider sets";
                return true;
            });

    r.check("lemmas", "lemmas/rc-class-sizes",
            "avoidance counts invariant under reverse-complement, n <= n_max",
            [&](std::string& lhs, std::string& rhs) {
                for (const char* pat : {"1-3-2", "12-3", "213", "2-13", "1-23"}) {
                    auto p = GeneralizedPattern::parse(pat);
                    ConstraintSpec a, b;
                    a.avoid = {p};
                    b.avoid = {reverse_complement(p)};
                    for (int n = 0; n <= n_hi; ++n)
                        if (r.oracle().count(a, n) != r.oracle().count(b, n)) {
                            lhs = r.oracle().count(a, n).str();
                            rhs = r.oracle().count(b, n).str();
                            return false;
                        }
                }
                lhs = rhs = "classes match";
                return true;
            });

    r.check("lemmas", "lemmas/rc-window-transport",
            "begin/end windows swap under reverse-complement, n <= 8",
            [&](std::string& lhs, std::string& rhs) {
                int hi = std::min(8, r.opts().n_max);
                for (const char* pat : {"213", "1-32"}) {
                    auto p = GeneralizedPattern::parse(pat);
                    auto q = reverse_complement(p);
                    for (int n = 0; n <= hi; ++n)
                        for (Dir bd : {Dir::inc, Dir::dec})
                            for (Dir ed : {Dir::inc, Dir::dec})
                                for (int k = 1; k <= 3; ++k)
                                    for (int l = 1; l <= 3; ++l) {
                                        BigInt a =
                                            r.oracle().monotone_count({p}, bd, k, ed, l, n);
                                        BigInt b =
                                            r.oracle().monotone_count({q}, ed, l, bd, k, n);
                                        if (a != b) {
                                            lhs = a.str();
                                            rhs = b.str();
                                            return false;
                                        }
                                    }
                }
                lhs = rhs = "windows transport";
                return true;
            });
}

// --- section 9 -----------------------------------------------------------------

inline void register_section9(Runner& r) {
    using namespace gpav::series;
    const int n_hi = std::min(10, r.opts().n_max);
    std::vector<GeneralizedPattern> dbl{GeneralizedPattern::parse("12-3"),
                                        GeneralizedPattern::parse("21-3")};
    for (int k = 1; k <= std::min(3, r.opts().kl_max); ++k) {
        for (int l = 1; l <= std::min(3, r.opts().kl_max); ++l) {
            std::ostringstream cid;
            cid << "section9/double-avoidance/k=" << k << ",l=" << l;
            r.check("section9", cid.str(),
                    "double-avoidance closed form vs oracle, rounding contract",
                    [&, k, l](std::string& lhs, std::string& rhs) {
                        FloatSeries s =
                            egf_formula("12-3&21-3:inc,inc", k, l,
                                        std::min(std::max(n_hi + 1, 2), float_order_cap));
                        for (int n = 0; n <= n_hi && n < s.order(); ++n) {
                            BigInt want =
                                n == 0 ? BigInt(0)
                                       : r.oracle().monotone_count(dbl, Dir::inc, k,
                                                                   Dir::inc, l, n);
                            BigInt got = counts_from_series(s, n);
                            if (got != want) {
                                lhs = got.str();
                                rhs = want.str() + " (n=" + std::to_string(n) + ")";
                                return false;
                            }
                        }
                        lhs = rhs = "agree to n=" + std::to_string(n_hi);
                        return true;
                    });
        }
    }

    const int ex_hi = std::min(9, r.opts().n_max);
    auto F = [&](int m) {
        return r.oracle().count_exactly(GeneralizedPattern::parse("12-3"), 1, {}, {}, m);
    };
    for (int k = 1; k <= 4; ++k) {
        std::ostringstream cid;
        cid << "section9/exactly-once/k=" << k;
        r.check("section9", cid.str(), "exactly-once identity vs oracle, n = 3..9",
                [&, k](std::string& lhs, std::string& rhs) {
                    for (int n = 3; n <= ex_hi; ++n) {
                        BigInt got = counting::exactly_once_12_3(n, k, F);
                        BigInt want = r.oracle().count_exactly(
                            GeneralizedPattern::parse("12-3"), 1, monotone(Dir::inc, k),
                            Permutation::parse("1"), n);
                        if (got != want) {
                            lhs = got.str();
                            rhs = want.str() + " (n=" + std::to_string(n) + ")";
                            return false;
                        }
                    }
                    lhs = rhs = "agree for n=3.." + std::to_string(ex_hi);
                    return true;
                });
    }

    r.check("section9", "section9/occurrence-partition",
            "exactly-r counts over all r partition S_n, n <= 7",
            [&](std::string& lhs, std::string& rhs) {
                auto p = GeneralizedPattern::parse("12-3");
                int hi = std::min(7, r.opts().n_max);
                for (int n = 0; n <= hi; ++n) {
                    BigInt total = 0, want = factorial(n);
                    for (std::int64_t rr = 0; total < want && rr <= 64; ++rr)
                        total += r.oracle().count_exactly(p, rr, {}, {}, n);
                    if (total != want) {
                        lhs = total.str();
                        rhs = want.str();
                        return false;
                    }
                }
                lhs = rhs = "partition holds";
                return true;
            });
}

}  // namespace detail

inline VerificationReport run(const Options& opts, Oracle& oracle) {
    static const std::set<std::string> known{"all",    "tables", "ogf",
                                             "egf",    "lemmas", "section9"};
    if (!known.count(opts.suite)) throw std::invalid_argument("unknown suite: " + opts.suite);
    auto start = std::chrono::steady_clock::now();
    detail::Runner r(opts, oracle);
    detail::register_tables(r);
    detail::register_ogf(r);
    detail::register_egf(r);
    detail::register_lemmas(r);
    detail::register_section9(r);
    VerificationReport rep = r.take();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace gpav::verify
