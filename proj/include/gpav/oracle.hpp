#pragma once

// Exhaustive enumeration of S_n under a constraint set: the ground truth
// that every recurrence, closed form and generating function in this
// library is checked against.
//
// The search walks prefixes and kills a branch as soon as a forbidden
// occurrence is complete inside the prefix; appending letters never removes
// occurrences, so that prune is sound. A begin pattern is tested the moment
// the prefix window is full, the end pattern only on complete permutations,
// and an exact-occurrence requirement only rejects early once the running
// count exceeds the target (counts only grow).
//
// The search space is partitioned by first letter; partitions are summed in
// letter order, so results are deterministic regardless of scheduling.

#include <array>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gpav/arith.hpp"
#include "gpav/perm.hpp"
#include "gpav/record.hpp"

namespace gpav {

struct ConstraintSpec {
    std::vector<GeneralizedPattern> avoid;
    std::optional<Permutation> begin;
    std::optional<Permutation> end;
    std::optional<std::pair<GeneralizedPattern, std::int64_t>> exactly;

    // Sorts the avoid set and rejects incompatible avoid/exactly combinations
    // (a pattern may sit in both only when r = 0, which means avoidance).
    void normalize() {
        std::sort(avoid.begin(), avoid.end());
        avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());
        if (exactly && exactly->second < 0)
            throw std::invalid_argument("exact occurrence count must be non-negative");
        if (exactly && exactly->second > 0) {
            for (const auto& p : avoid)
                if (p == exactly->first)
                    throw std::invalid_argument(
                        "pattern cannot be avoided and required " +
                        std::to_string(exactly->second) + " times at once");
        }
    }

    std::string canonical() const {
        ConstraintSpec s = *this;
        s.normalize();
        std::ostringstream os;
        os << "avoid=";
        for (std::size_t i = 0; i < s.avoid.size(); ++i)
            os << (i ? "," : "") << s.avoid[i].str();
        if (s.begin) os << ";begin=" << s.begin->str();
        if (s.end) os << ";end=" << s.end->str();
        if (s.exactly) os << ";exactly=" << s.exactly->first.str() << ":" << s.exactly->second;
        return os.str();
    }
};

namespace detail {

struct Search {
    int n = 0;
    const std::vector<GeneralizedPattern>* avoid = nullptr;
    const Permutation* begin = nullptr;
    const Permutation* end = nullptr;
    const GeneralizedPattern* exactly_p = nullptr;
    std::int64_t exactly_r = 0;

    // Appends v, runs the prefix checks, and counts completions underneath.
    std::int64_t extend(std::vector<int>& prefix, std::uint32_t& used,
                        std::int64_t xcount, int v) const {
        prefix.push_back(v);
        used |= 1u << v;
        std::int64_t total = 0;
        const int d = (int)prefix.size();
        bool ok = true;
        for (const auto& p : *avoid) {
            if (occurrences_ending_at(p, prefix, d - 1) > 0) {
                ok = false;
                break;
            }
        }
        if (ok && exactly_p) {
            xcount += occurrences_ending_at(*exactly_p, prefix, d - 1);
            if (xcount > exactly_r) ok = false;
        }
        if (ok && begin && d == begin->size())
            ok = order_isomorphic_prefix(prefix, *begin);
        if (ok) {
            if (d == n) {
                bool accept = true;
                if (end) accept = suffix_matches(prefix, *end);
                if (accept && exactly_p) accept = xcount == exactly_r;
                total = accept ? 1 : 0;
            } else {
                for (int w = 1; w <= n; ++w)
                    if (!(used & (1u << w))) total += extend(prefix, used, xcount, w);
            }
        }
        prefix.pop_back();
        used &= ~(1u << v);
        return total;
    }

    static bool order_isomorphic_prefix(const std::vector<int>& prefix, const Permutation& q) {
        for (int i = 0; i < q.size(); ++i)
            for (int j = i + 1; j < q.size(); ++j)
                if ((prefix[i] < prefix[j]) != (q[i] < q[j])) return false;
        return true;
    }

    static bool suffix_matches(const std::vector<int>& word, const Permutation& r) {
        int n = (int)word.size(), m = r.size();
        if (m > n) return false;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if ((word[n - m + i] < word[n - m + j]) != (r[i] < r[j])) return false;
        return true;
    }
};

}  // namespace detail

class Oracle {
public:
    static constexpr int hard_cap = 12;

    struct Config {
        int n_max = 10;       // default matches the tabulated ranges
        int threads = 0;      // 0 = auto, 1 = serial
        std::string cache_file;
    };

    Oracle() = default;
    explicit Oracle(Config cfg) : cfg_(std::move(cfg)) {
        if (cfg_.n_max > hard_cap)
            throw std::invalid_argument("oracle n_max above hard cap " +
                                        std::to_string(hard_cap));
    }

    int n_max() const { return cfg_.n_max; }

    BigInt count(const ConstraintSpec& raw, int n) {
        ConstraintSpec spec = raw;
        spec.normalize();
        check_cap(n);
        const std::string key = spec.canonical();
        {
            std::lock_guard<std::mutex> lock(mu_);
            load_cache_file_locked();
            auto it = memo_.find({key, n});
            if (it != memo_.end()) return it->second;
        }
        BigInt value = enumerate(spec, n);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto [it, fresh] = memo_.emplace(std::make_pair(key, n), value);
            if (fresh) append_cache_file_locked(key, n, value);
        }
        return value;
    }

    SequenceRecord sequence(const ConstraintSpec& spec, int seq_n_max) {
        check_cap(seq_n_max);
        SequenceRecord rec;
        rec.spec = spec.canonical();
        rec.name = rec.spec;
        rec.provenance = "oracle";
        rec.values.reserve(seq_n_max + 1);
        for (int n = 0; n <= seq_n_max; ++n) rec.values.push_back(count(spec, n));
        return rec;
    }

    BigInt count_exactly(const GeneralizedPattern& p, std::int64_t r,
                         std::optional<Permutation> begin, std::optional<Permutation> end,
                         int n) {
        ConstraintSpec spec;
        spec.begin = std::move(begin);
        spec.end = std::move(end);
        spec.exactly = {p, r};
        return count(spec, n);
    }

    // Fast path for the verification suites: one enumeration of the avoiders
    // of `avoid` at length n serves every monotone begin/end window at once.
    // Equivalent to count() with begin = monotone(bd,k), end = monotone(ed,l).
    BigInt monotone_count(const std::vector<GeneralizedPattern>& avoid, Dir bd, int k,
                          Dir ed, int l, int n) {
        if (k < 1 || l < 1) throw std::invalid_argument("window lengths must be >= 1");
        if (k > Profile::cap || l > Profile::cap) {
            ConstraintSpec spec;
            spec.avoid = avoid;
            spec.begin = monotone(bd, k);
            spec.end = monotone(ed, l);
            return count(spec, n);
        }
        check_cap(n);
        if (n == 0) return 0;
        ConstraintSpec key_spec;
        key_spec.avoid = avoid;
        const std::string key = key_spec.canonical();
        Profile prof;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = profiles_.find({key, n});
            if (it != profiles_.end()) prof = it->second;
        }
        if (prof.total < 0) {
            prof = build_profile(avoid, n);
            std::lock_guard<std::mutex> lock(mu_);
            profiles_.emplace(std::make_pair(key, n), prof);
        }
        long long sum = 0;
        for (int a = k; a <= Profile::cap; ++a)
            for (int b = l; b <= Profile::cap; ++b)
                sum += prof.cnt[bd == Dir::dec][ed == Dir::dec][a][b];
        return BigInt(sum);
    }

private:
    struct Profile {
        static constexpr int cap = 6;
        long long total = -1;  // -1 marks "not built"
        long long cnt[2][2][cap + 1][cap + 1] = {};
    };

    Config cfg_;
    std::mutex mu_;
    std::map<std::pair<std::string, int>, BigInt> memo_;
    std::map<std::pair<std::string, int>, Profile> profiles_;
    bool cache_loaded_ = false;

    void check_cap(int n) const {
        if (n < 0) throw std::invalid_argument("n must be non-negative");
        if (n > cfg_.n_max)
            throw std::runtime_error("oracle: n=" + std::to_string(n) +
                                     " exceeds configured n_max=" + std::to_string(cfg_.n_max) +
                                     " (hard cap " + std::to_string(hard_cap) + ")");
    }

    int worker_count(int n) const {
        int hw = (int)std::thread::hardware_concurrency();
        int t = cfg_.threads > 0 ? cfg_.threads : (hw > 0 ? hw : 1);
        if (n < 8) t = 1;  // short searches are not worth the spawn cost
        return t;
    }

    BigInt enumerate(const ConstraintSpec& spec, int n) const {
        if (n == 0) {
            bool ok = !spec.begin && !spec.end &&
                      (!spec.exactly || spec.exactly->second == 0);
            return ok ? 1 : 0;
        }
        if ((spec.begin && spec.begin->size() > n) || (spec.end && spec.end->size() > n))
            return 0;
        detail::Search s;
        s.n = n;
        s.avoid = &spec.avoid;
        s.begin = spec.begin ? &*spec.begin : nullptr;
        s.end = spec.end ? &*spec.end : nullptr;
        if (spec.exactly) {
            s.exactly_p = &spec.exactly->first;
            s.exactly_r = spec.exactly->second;
        }
        if (worker_count(n) <= 1) {
            std::int64_t total = 0;
            std::vector<int> prefix;
            prefix.reserve(n);
            std::uint32_t used = 0;
            for (int v = 1; v <= n; ++v) total += s.extend(prefix, used, 0, v);
            return BigInt(total);
        }
        std::vector<std::future<std::int64_t>> parts;
        parts.reserve(n);
        for (int v = 1; v <= n; ++v) {
            parts.push_back(std::async(std::launch::async, [&s, v, n]() {
                std::vector<int> prefix;
                prefix.reserve(n);
                std::uint32_t used = 0;
                return s.extend(prefix, used, 0, v);
            }));
        }
        BigInt total = 0;
        for (auto& f : parts) total += f.get();
        return total;
    }

    Profile build_profile(const std::vector<GeneralizedPattern>& avoid, int n) const {
        auto walk_from = [&](int first, Profile& prof) {
            std::vector<int> prefix;
            prefix.reserve(n);
            std::uint32_t used = 0;
            std::function<void(int)> go = [&](int v) {
                prefix.push_back(v);
                used |= 1u << v;
                bool ok = true;
                for (const auto& p : avoid)
                    if (occurrences_ending_at(p, prefix, (int)prefix.size() - 1) > 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    if ((int)prefix.size() == n)
                        tally(prefix, prof);
                    else
                        for (int w = 1; w <= n; ++w)
                            if (!(used & (1u << w))) go(w);
                }
                prefix.pop_back();
                used &= ~(1u << v);
            };
            go(first);
        };
        Profile prof;
        prof.total = 0;
        if (worker_count(n) <= 1) {
            for (int v = 1; v <= n; ++v) walk_from(v, prof);
            return prof;
        }
        std::vector<std::future<Profile>> parts;
        for (int v = 1; v <= n; ++v)
            parts.push_back(std::async(std::launch::async, [&walk_from, v]() {
                Profile part;
                part.total = 0;
                walk_from(v, part);
                return part;
            }));
        for (auto& f : parts) {
            Profile part = f.get();
            prof.total += part.total;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int i = 0; i <= Profile::cap; ++i)
                        for (int j = 0; j <= Profile::cap; ++j)
                            prof.cnt[a][b][i][j] += part.cnt[a][b][i][j];
        }
        return prof;
    }

    static void tally(const std::vector<int>& w, Profile& prof) {
        int n = (int)w.size();
        int ai = 1, ad = 1, bi = 1, bd = 1;
        while (ai < n && w[ai - 1] < w[ai]) ++ai;
        while (ad < n && w[ad - 1] > w[ad]) ++ad;
        while (bi < n && w[n - bi - 1] < w[n - bi]) ++bi;
        while (bd < n && w[n - bd - 1] > w[n - bd]) ++bd;
        auto clamp = [](int x) { return x > Profile::cap ? Profile::cap : x; };
        prof.cnt[0][0][clamp(ai)][clamp(bi)]++;
        prof.cnt[0][1][clamp(ai)][clamp(bd)]++;
        prof.cnt[1][0][clamp(ad)][clamp(bi)]++;
        prof.cnt[1][1][clamp(ad)][clamp(bd)]++;
        prof.total++;
    }

    void load_cache_file_locked() {
        if (cache_loaded_ || cfg_.cache_file.empty()) {
            cache_loaded_ = true;
            return;
        }
        cache_loaded_ = true;
        std::ifstream in(cfg_.cache_file);
        if (!in) return;  // created on first append
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto t1 = line.find('\t');
            auto t2 = line.find('\t', t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos) continue;
            std::string key = line.substr(0, t1);
            int n = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
            BigInt v(line.substr(t2 + 1));
            memo_.emplace(std::make_pair(key, n), v);
        }
    }

    void append_cache_file_locked(const std::string& key, int n, const BigInt& v) {
        if (cfg_.cache_file.empty()) return;
        std::ofstream out(cfg_.cache_file, std::ios::app);
        if (!out) return;
        std::string line = key + "\t" + std::to_string(n) + "\t" + v.str() + "\n";
        out.write(line.data(), (std::streamsize)line.size());
        out.flush();
    }
};

}  // namespace gpav
