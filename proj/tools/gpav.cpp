// gpav: counts of pattern-avoiding permutations with boundary windows.
//
//   gpav count  --avoid 1-3-2 --begin 12 --end 123 --n 10
//   gpav seq    --avoid 132,312 --n-max 10 [--format tsv|json] [--engine ...]
//   gpav verify --suite all [--n-max 9] [--kl-max 3]
//
// Engines: oracle (exhaustive search), recurrence, formula (closed-form
// counts), series (generating-function coefficients). The default picks the
// cheapest engine that covers the request; a non-oracle engine asked to
// handle a request outside its registry fails loudly rather than falling
// back.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpav/counting.hpp"
#include "gpav/oracle.hpp"
#include "gpav/perm.hpp"
#include "gpav/record.hpp"
#include "gpav/series.hpp"
#include "gpav/verify.hpp"

namespace {

using namespace gpav;

struct CommonArgs {
    std::vector<std::string> avoid;
    std::string begin, end, exactly;
    std::string cache;
    int threads = 0;
};

struct ParsedSpec {
    ConstraintSpec spec;
    // Monotone window views (set when the windows are monotone runs).
    std::optional<std::pair<Dir, int>> bwin, ewin;
};

std::optional<std::pair<Dir, int>> monotone_window(const std::optional<Permutation>& p) {
    if (!p) return std::nullopt;
    const auto& w = p->letters();
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        inc = inc && w[i] < w[i + 1];
        dec = dec && w[i] > w[i + 1];
    }
    if (inc) return std::make_pair(Dir::inc, (int)w.size());
    if (dec) return std::make_pair(Dir::dec, (int)w.size());
    return std::nullopt;
}

ParsedSpec build_spec(const CommonArgs& args) {
    ParsedSpec out;
    for (const auto& a : args.avoid)
        out.spec.avoid.push_back(GeneralizedPattern::parse(a));
    if (!args.begin.empty()) out.spec.begin = Permutation::parse(args.begin);
    if (!args.end.empty()) out.spec.end = Permutation::parse(args.end);
    if (!args.exactly.empty()) {
        auto colon = args.exactly.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--exactly wants <pattern>:<count>");
        out.spec.exactly = {GeneralizedPattern::parse(args.exactly.substr(0, colon)),
                            std::stoll(args.exactly.substr(colon + 1))};
    }
    out.spec.normalize();
    out.bwin = monotone_window(out.spec.begin);
    out.ewin = monotone_window(out.spec.end);
    return out;
}

std::string avoid_key(const ConstraintSpec& spec) {
    std::string s;
    for (std::size_t i = 0; i < spec.avoid.size(); ++i)
        s += (i ? "," : "") + spec.avoid[i].str();
    return s;
}

// --- individual engines; each returns nothing when the request is outside
// --- its registry, and the caller reports that honestly.

std::optional<BigInt> formula_count(const ParsedSpec& ps, int n, Oracle& oracle) {
    const auto& s = ps.spec;
    if (s.exactly) {
        // Exactly-once identities: pattern 12-3, rising begin window, free end.
        if (!s.avoid.empty() || s.exactly->second != 1) return std::nullopt;
        if (s.exactly->first.str() != "12-3") return std::nullopt;
        if (s.end && s.end->size() != 1) return std::nullopt;
        int k = 1;
        if (s.begin) {
            if (!ps.bwin || ps.bwin->first != Dir::inc) return std::nullopt;
            k = ps.bwin->second;
        }
        if (n < 3) return oracle.count(s, n);  // identities start at n = 3
        auto F = [&](int m) {
            return oracle.count_exactly(GeneralizedPattern::parse("12-3"), 1, {}, {}, m);
        };
        return counting::exactly_once_12_3(n, k, F);
    }
    if (avoid_key(s) != "1-2-3") return std::nullopt;
    if ((s.begin && !ps.bwin) || (s.end && !ps.ewin)) return std::nullopt;
    if (!s.begin && !s.end) return n == 0 ? BigInt(1) : catalan(n);
    if (n == 0) return BigInt(0);
    if (s.begin && s.end)
        return counting::count_123_two_sided(n, ps.bwin->first, ps.ewin->first,
                                             ps.bwin->second, ps.ewin->second);
    if (s.begin) return counting::count_123_begin(n, ps.bwin->first, ps.bwin->second);
    // End window only: reverse-complement carries it to the front unchanged.
    return counting::count_123_begin(n, ps.ewin->first, ps.ewin->second);
}

std::optional<BigInt> recurrence_count(const ParsedSpec& ps, int n, Oracle& oracle) {
    const auto& s = ps.spec;
    if (s.exactly) return std::nullopt;
    std::string key = avoid_key(s);
    if (!s.begin && !s.end) {
        std::string pair_id;
        if (key == "123,231") pair_id = "123&231";
        if (key == "132,213") pair_id = "132&213";
        if (key == "132,312") pair_id = "132&312";
        if (key == "213,231") pair_id = "213&231";
        if (!pair_id.empty()) return counting::pair_avoidance(pair_id, n).values[n];
    }
    if (s.avoid.size() != 1) return std::nullopt;
    if ((s.begin && !ps.bwin) || (s.end && !ps.ewin)) return std::nullopt;
    Dir bd = ps.bwin ? ps.bwin->first : Dir::inc;
    Dir ed = ps.ewin ? ps.ewin->first : Dir::inc;
    int k = ps.bwin ? ps.bwin->second : 1;
    int l = ps.ewin ? ps.ewin->second : 1;
    if (!counting::TwoSidedRecurrences::covered(key, bd, ed)) return std::nullopt;
    if (n == 0) return BigInt(!s.begin && !s.end ? 1 : 0);
    counting::OracleBaseProvider base(oracle);
    counting::TwoSidedRecurrences rec(base, n);
    return rec.get(key, bd, k, ed, l)[n];
}

std::optional<BigInt> series_count(const ParsedSpec& ps, int n, Oracle&) {
    using namespace gpav::series;
    const auto& s = ps.spec;
    if (s.exactly) return std::nullopt;
    if ((s.begin && !ps.bwin) || (s.end && !ps.ewin)) return std::nullopt;
    Dir bd = ps.bwin ? ps.bwin->first : Dir::inc;
    Dir ed = ps.ewin ? ps.ewin->first : Dir::inc;
    int k = ps.bwin ? ps.bwin->second : 1;
    int l = ps.ewin ? ps.ewin->second : 1;
    std::string key = avoid_key(s);
    std::string id = key + ":" + dir_name(bd) + "," + dir_name(ed);
    if (key == "12-3,21-3") id = std::string("12-3&21-3:") + dir_name(bd) + "," + dir_name(ed);
    if (n == 0) {
        if (!has_ogf(id) && !has_egf(id, k, l)) return std::nullopt;
        return BigInt(!s.begin && !s.end ? 1 : 0);
    }
    if (has_ogf(id))
        return counts_from_series(ogf_formula(id, k, l, std::max(n + 1, k + l)), n);
    if (has_egf(id, k, l)) {
        if (n + 1 > float_order_cap)
            throw std::runtime_error("series engine: n exceeds the float order budget");
        return counts_from_series(egf_formula(id, k, l, n + 1), n);
    }
    return std::nullopt;
}

// Returns the count and reports which engine served it (interesting for the
// default, which picks the cheapest covering engine).
BigInt engine_count(const std::string& engine, const ParsedSpec& ps, int n, Oracle& oracle,
                    std::string* used = nullptr) {
    auto serve = [&](const char* name, BigInt v) {
        if (used) *used = name;
        return v;
    };
    if (engine == "oracle") return serve("oracle", oracle.count(ps.spec, n));
    std::optional<BigInt> v;
    if (engine == "formula") {
        v = formula_count(ps, n, oracle);
    } else if (engine == "recurrence") {
        v = recurrence_count(ps, n, oracle);
    } else if (engine == "series") {
        v = series_count(ps, n, oracle);
    } else if (engine == "auto") {
        if ((v = formula_count(ps, n, oracle))) return serve("formula", *v);
        if ((v = recurrence_count(ps, n, oracle))) return serve("recurrence", *v);
        if ((v = series_count(ps, n, oracle))) return serve("series", *v);
        return serve("oracle", oracle.count(ps.spec, n));
    } else {
        throw std::invalid_argument("unknown engine: " + engine);
    }
    if (!v)
        throw std::runtime_error("no registered formula for this request under engine '" +
                                 engine + "'");
    return serve(engine.c_str(), *v);
}

std::string engine_provenance(const std::string& engine) {
    if (engine == "oracle") return "oracle";
    if (engine == "recurrence") return "recurrence";
    if (engine == "series") return "series";
    return "closed-form";  // formula engine
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding permutation counts with boundary windows"};
    app.require_subcommand(1);

    CommonArgs args;
    int n = 0, seq_n_max = 10;
    std::string engine = "auto";
    std::vector<std::string> engines;
    std::string format = "tsv";
    verify::Options vopts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--avoid", args.avoid,
                        "patterns to avoid (dashes mark non-adjacency), comma separated")
            ->delimiter(',');
        cmd->add_option("--begin", args.begin, "pattern the prefix must realize");
        cmd->add_option("--end", args.end, "pattern the suffix must realize");
        cmd->add_option("--exactly", args.exactly, "<pattern>:<r> exact occurrence demand");
        cmd->add_option("--cache", args.cache, "oracle cache file");
        cmd->add_option("--threads", args.threads, "oracle worker threads (0 = auto)");
    };

    CLI::App* count = app.add_subcommand("count", "count permutations of one length");
    add_common(count);
    count->add_option("--n", n, "permutation length")->required();
    count->add_option("--engine", engine, "oracle|recurrence|formula|series|auto");

    CLI::App* seq = app.add_subcommand("seq", "print a sequence table");
    add_common(seq);
    seq->add_option("--n-max", seq_n_max, "largest length");
    seq->add_option("--engine", engines, "engines, side by side")->delimiter(',');
    seq->add_option("--format", format, "tsv|json");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites");
    verify_cmd->add_option("--suite", vopts.suite, "tables|ogf|egf|lemmas|section9|all");
    verify_cmd->add_option("--n-max", vopts.n_max, "bound for oracle-backed sweeps");
    verify_cmd->add_option("--kl-max", vopts.kl_max, "bound for window lengths");
    verify_cmd->add_option("--cache", args.cache, "oracle cache file");
    verify_cmd->add_option("--threads", args.threads, "oracle worker threads");

    std::string family_id;
    int win_k = 1, win_l = 1, order = 0;
    CLI::App* series_cmd =
        app.add_subcommand("series", "print a registered generating function");
    series_cmd->add_option("--family", family_id, "e.g. 1-3-2:inc,inc or 123:dec,dec")
        ->required();
    series_cmd->add_option("--k", win_k, "begin window length");
    series_cmd->add_option("--l", win_l, "end window length");
    series_cmd->add_option("--order", order, "truncation order (default 24 exact / 14 float)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) {
            if (n > Oracle::hard_cap)
                throw std::runtime_error("n=" + std::to_string(n) +
                                         " exceeds the oracle hard cap " +
                                         std::to_string(Oracle::hard_cap));
            Oracle oracle(Oracle::Config{.n_max = std::max(10, n),
                                         .threads = args.threads,
                                         .cache_file = args.cache});
            ParsedSpec ps = build_spec(args);
            std::cout << engine_count(engine, ps, n, oracle).str() << "\n";
            return 0;
        }
        if (seq->parsed()) {
            if (seq_n_max > Oracle::hard_cap)
                throw std::runtime_error("--n-max exceeds the oracle hard cap " +
                                         std::to_string(Oracle::hard_cap));
            Oracle oracle(Oracle::Config{.n_max = std::max(10, seq_n_max),
                                         .threads = args.threads,
                                         .cache_file = args.cache});
            ParsedSpec ps = build_spec(args);
            if (engines.empty()) engines.push_back("auto");
            std::vector<SequenceRecord> records;
            for (const auto& eng : engines) {
                SequenceRecord rec;
                rec.spec = ps.spec.canonical();
                rec.name = rec.spec;
                std::string used = eng;
                for (int i = 0; i <= seq_n_max; ++i)
                    rec.values.push_back(engine_count(eng, ps, i, oracle, &used));
                rec.provenance = engine_provenance(used);
                records.push_back(std::move(rec));
            }
            if (format == "json") {
                if (records.size() == 1) {
                    std::cout << to_json(records[0]).dump(2) << "\n";
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& rec : records) arr.push_back(to_json(rec));
                    std::cout << arr.dump(2) << "\n";
                }
            } else if (format == "tsv") {
                std::cout << "n";
                for (const auto& eng : engines) std::cout << "\t" << eng;
                std::cout << "\n";
                for (int i = 0; i <= seq_n_max; ++i) {
                    std::cout << i;
                    for (const auto& rec : records) std::cout << "\t" << rec.values[i].str();
                    std::cout << "\n";
                }
            } else {
                throw std::invalid_argument("unknown format: " + format);
            }
            return 0;
        }
        if (series_cmd->parsed()) {
            using namespace gpav::series;
            if (has_ogf(family_id)) {
                std::cout << render_lines(
                    ogf_formula(family_id, win_k, win_l,
                                order > 0 ? order : default_exact_order));
            } else if (has_egf(family_id, win_k, win_l)) {
                std::cout << render_lines(
                    egf_formula(family_id, win_k, win_l,
                                order > 0 ? order : default_float_order));
            } else {
                throw std::runtime_error("no registered formula for " + family_id);
            }
            return 0;
        }
        // verify
        if (vopts.n_max > Oracle::hard_cap)
            throw std::invalid_argument("--n-max above the oracle hard cap " +
                                        std::to_string(Oracle::hard_cap));
        Oracle oracle(Oracle::Config{.n_max = std::max(10, vopts.n_max),
                                     .threads = args.threads,
                                     .cache_file = args.cache});
        verify::VerificationReport rep = verify::run(vopts, oracle);
        for (const auto& c : rep.checks)
            std::cout << c.status << "\t" << c.id << "\t" << c.lhs << "\t" << c.rhs << "\t"
                      << c.location << "\n";
        std::cout << "checks: " << rep.checks.size() << "  pass: " << rep.passed
                  << "  fail: " << rep.failed << "  skipped: " << rep.skipped << "  ("
                  << rep.seconds << "s)\n";
        return rep.failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
