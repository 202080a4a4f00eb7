#pragma once

// Exact integer counting: the contiguous-pair recurrences, the closed-form
// counts for classical 1-2-3 avoiders with monotone boundary windows
// (including the first/last-letter tables they are built from), the
// convolution recurrences for single-pattern families with monotone windows,
// and the exactly-once identities. Base sequences that the source formulas
// cite from elsewhere are never hard-coded; they are supplied by a
// BaseProvider (in practice the enumeration oracle).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gpav/arith.hpp"
#include "gpav/oracle.hpp"
#include "gpav/perm.hpp"
#include "gpav/record.hpp"

namespace gpav::counting {

// Row-by-row table of big integers keyed by (n, i) or (n, i, j). Pair tables
// keep a zero diagonal: entries (n; i, i) may never be set nonzero.
class TriangularTable {
public:
    explicit TriangularTable(int arity) : arity_(arity) {
        if (arity != 1 && arity != 2) throw std::invalid_argument("arity must be 1 or 2");
    }

    void set(int n, int i, const BigInt& v) {
        if (arity_ != 1) throw std::logic_error("table is 2-indexed");
        data_[{n, i, 0}] = v;
    }
    void set(int n, int i, int j, const BigInt& v) {
        if (arity_ != 2) throw std::logic_error("table is 1-indexed");
        if (i == j && v != 0) throw std::invalid_argument("diagonal entries must stay zero");
        data_[{n, i, j}] = v;
    }

    BigInt at(int n, int i, int j = 0) const {
        auto it = data_.find({n, i, j});
        return it == data_.end() ? BigInt(0) : it->second;
    }

private:
    int arity_;
    std::map<std::tuple<int, int, int>, BigInt> data_;
};

// --- contiguous pair classes ----------------------------------------------

// Counts permutations avoiding both contiguous patterns of the named pair,
// by the first-letter / first-two-letter recurrences. "213&231" is served
// through the "132&312" table; the two classes match under reversal.
inline SequenceRecord pair_avoidance(const std::string& pair_id, int n_max) {
    auto run_first_letter = [&](std::vector<BigInt>& s) {
        // avoid {123, 231}: rows indexed by first letter.
        std::vector<std::vector<BigInt>> a(std::max(3, n_max + 1));
        a[1] = {BigInt(0), BigInt(1)};
        a[2] = {BigInt(0), BigInt(1), BigInt(1)};
        for (int n = 3; n <= n_max; ++n) {
            a[n].assign(n + 1, BigInt(0));
            for (int i = 1; i <= n; ++i) {
                BigInt v = 0;
                for (int j = 1; j <= i - 1 && j <= n - 1; ++j) v += a[n - 1][j];
                for (int j = i; j <= n - 2; ++j) v += BigInt(n - 1 - j) * a[n - 2][j];
                a[n][i] = v;
            }
        }
        s.assign(n_max + 1, BigInt(0));
        if (n_max >= 0) s[0] = 1;
        for (int n = 1; n <= n_max; ++n)
            for (int i = 1; i <= std::min(n, (int)a[n].size() - 1); ++i) s[n] += a[n][i];
    };

    // avoid {132,213} or {132,312}: rows indexed by the first two letters.
    auto run_pair_table = [&](bool gt_variant_312, std::vector<BigInt>& s) {
        TriangularTable t(2);
        t.set(2, 1, 2, 1);
        t.set(2, 2, 1, 1);
        for (int n = 3; n <= n_max; ++n) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    BigInt v = 0;
                    if (i > j) {
                        if (gt_variant_312) {
                            for (int k = 1; k <= j - 1; ++k) v += t.at(n - 1, j, k);
                            for (int k = i; k <= n - 1; ++k) v += t.at(n - 1, j, k);
                        } else {
                            for (int k = 1; k <= i - 1; ++k) v += t.at(n - 1, j, k);
                        }
                    } else {
                        for (int k = 1; k <= i - 1; ++k) v += t.at(n - 1, j - 1, k);
                        for (int k = j; k <= n - 1; ++k) v += t.at(n - 1, j - 1, k);
                    }
                    t.set(n, i, j, v);
                }
            }
        }
        s.assign(n_max + 1, BigInt(0));
        if (n_max >= 0) s[0] = 1;
        if (n_max >= 1) s[1] = 1;
        for (int n = 2; n <= n_max; ++n)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) s[n] += t.at(n, i, j);
    };

    SequenceRecord rec;
    rec.provenance = "recurrence";
    rec.spec = "pair:" + pair_id;
    rec.name = "contiguous pair " + pair_id;
    if (pair_id == "123&231") {
        run_first_letter(rec.values);
    } else if (pair_id == "132&213") {
        run_pair_table(false, rec.values);
    } else if (pair_id == "132&312") {
        run_pair_table(true, rec.values);
    } else if (pair_id == "213&231") {
        run_pair_table(true, rec.values);  // equal to 132&312 under reversal
    } else {
        throw std::invalid_argument("unknown pair id: " + pair_id);
    }
    return rec;
}

// --- classical 1-2-3 with monotone windows ---------------------------------

// Number of 1-2-3-avoiding n-permutations whose first letter is t.
// Alternating-binomial form of the shift recurrence; the boundary cases are
// s_n(n) = s_n(n-1) = C_{n-1}.
inline BigInt count_123_by_first_letter(int n, int t) {
    if (n < 1 || t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
    BigInt v = 0;
    for (int j = 0; j <= n - t; ++j) {
        BigInt term = binomial(n - t - j, j) * catalan(n - 1 - j);
        v += (j % 2 == 0) ? term : -term;
    }
    return v;
}

// 1-2-3-avoiding n-permutations beginning with a monotone window of length k.
inline BigInt count_123_begin(int n, Dir d, int k) {
    if (k < 1) throw std::invalid_argument("window length must be >= 1");
    if (n < k) return 0;
    if (d == Dir::inc) {
        if (k >= 3) return 0;
        if (k == 2) return n >= 2 ? catalan(n - 1) : 0;
        return n >= 1 ? catalan(n) : 0;
    }
    // Decreasing window: split on the value t at position k; the k-1 letters
    // in front of it come from above t, the tail is a shorter avoider
    // starting at t.
    BigInt v = 0;
    for (int t = 1; t <= n + 1 - k; ++t)
        v += binomial(n - t, k - 1) * count_123_by_first_letter(n - k + 1, t);
    return v;
}

// 1-2-3-avoiding n-permutations with first letter a and last letter b.
inline BigInt count_123_first_last(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("letters out of range 1..n");
    if (n == 1) return a == 1 && b == 1 ? 1 : 0;
    if (a == b) return 0;
    if (b > a + 1) return 0;  // the letter a+1 would complete a rise
    if (b == a + 1) return binomial(n - 2, a - 1);
    BigInt v = 0;
    for (int j = 0; j <= n - a; ++j) {
        BigInt inner = 0;
        for (int i = 0; i <= b - 1; ++i) {
            BigInt term = binomial(b - 1 - i, i) * catalan(n - 2 - j - i);
            inner += (i % 2 == 0) ? term : -term;
        }
        BigInt term = binomial(n - a - j, j) * inner;
        v += (j % 2 == 0) ? term : -term;
    }
    return v;
}

// 1-2-3-avoiding n-permutations with a decreasing k-prefix ending in value t
// (at position k) and a decreasing l-suffix starting with value s (at
// position n-l+1). Piecewise: fully overlapping windows force the single
// decreasing permutation; separated windows reduce to the first/last table
// after stripping the outer window letters; s = t+1 swaps to s < t; s > t+1
// peels the letter s-1 off one of the two windows.
inline BigInt count_123_dec_ends(int n, int k, int l, int t, int s) {
    if (k <= 0 || l <= 0) return 0;  // the usual zero extension
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (t < 1 || t > n || s < 1 || s > n)
        throw std::invalid_argument("letters out of range 1..n");
    if (k > n || l > n) return 0;
    if (k + l >= n + 1) return (t == n - k + 1 && s == l) ? 1 : 0;
    if (t == s) return 0;

    static std::map<std::tuple<int, int, int, int, int>, BigInt> memo;
    static std::mutex mu;
    std::tuple<int, int, int, int, int> key{n, k, l, t, s};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt v;
    if (s < t) {
        BigInt front = binomial(n - t, k - 1), back = binomial(s - 1, l - 1);
        v = (front == 0 || back == 0)
                ? BigInt(0)
                : front * back *
                      count_123_first_last(n + 2 - k - l, t - l + 1, s - l + 1);
    } else if (s == t + 1) {
        v = count_123_dec_ends(n, k, l, t + 1, t);
    } else {
        v = count_123_dec_ends(n - 1, k, l - 1, t, s - 1) +
            count_123_dec_ends(n - 1, k - 1, l, t, s - 1);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(key, v);
    }
    return v;
}

// 1-2-3-avoiding n-permutations with monotone windows on both ends.
inline BigInt count_123_two_sided(int n, Dir bd, Dir ed, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("window lengths must be >= 1");
    if (n < k || n < l) return 0;
    if (bd == Dir::inc && ed == Dir::inc) {
        if (k >= 3 || l >= 3) return 0;
        if (k == 1 && l == 1) return n >= 1 ? catalan(n) : 0;
        if (k == 2 && l == 2) return (n < 2 || n == 3) ? BigInt(0) : catalan(n - 2);
        return n >= 2 ? catalan(n - 1) : 0;  // (1,2) and (2,1)
    }
    if (bd == Dir::dec && ed == Dir::inc) {
        if (l >= 3) return 0;
        if (l == 1) return count_123_begin(n, Dir::dec, k);
        BigInt v = count_123_begin(n - 1, Dir::dec, k);
        if (n == k + 1) v += k - 1;
        return v;
    }
    if (bd == Dir::inc && ed == Dir::dec) {
        // Mirror of the previous case under reverse-complement.
        return count_123_two_sided(n, Dir::dec, Dir::inc, l, k);
    }
    BigInt v = 0;  // both windows decreasing
    for (int t = 1; t <= n - k + 1; ++t)
        for (int s = l; s <= n; ++s) v += count_123_dec_ends(n, k, l, t, s);
    return v;
}

// --- single-pattern families with monotone windows --------------------------

// Supplies the sequences the family recurrences are anchored on: one-sided
// counts for the pattern itself (and its companions under the trivial
// bijections) plus the handful of short two-sided values used as initial
// conditions where boundary windows overlap.
struct BaseProvider {
    virtual ~BaseProvider() = default;
    virtual BigInt one_sided(const GeneralizedPattern& p, Dir d, int k, int m) = 0;
    virtual BigInt two_sided(const GeneralizedPattern& p, Dir bd, int k, Dir ed, int l,
                             int m) = 0;
};

struct OracleBaseProvider final : BaseProvider {
    Oracle& oracle;
    explicit OracleBaseProvider(Oracle& o) : oracle(o) {}
    BigInt one_sided(const GeneralizedPattern& p, Dir d, int k, int m) override {
        if (m <= 0) return 0;
        return oracle.monotone_count({p}, d, k, Dir::inc, 1, m);
    }
    BigInt two_sided(const GeneralizedPattern& p, Dir bd, int k, Dir ed, int l,
                     int m) override {
        if (m <= 0) return 0;
        return oracle.monotone_count({p}, bd, k, ed, l, m);
    }
};

// Count recurrences for N_p^{q,r}(n) with q, r monotone, anchored on
// one-sided base sequences. Mirror families are served through
// reverse-complement: it swaps the two windows and maps the pattern list
// {213,132}, {1-32,21-3}, {1-23,12-3} within itself (and fixes 123).
class TwoSidedRecurrences {
public:
    TwoSidedRecurrences(BaseProvider& base, int n_max) : base_(base), n_max_(n_max) {}

    static bool known_pattern(const std::string& pat) {
        return pat == "213" || pat == "132" || pat == "123" || pat == "1-32" ||
               pat == "21-3" || pat == "1-23" || pat == "12-3";
    }

    // True when a computation is registered (123 with both windows
    // increasing has closed forms elsewhere, not a recurrence).
    static bool covered(const std::string& pat, Dir bd, Dir ed) {
        if (!known_pattern(pat)) return false;
        std::string p = pat;
        Dir b = bd, e = ed;
        mirror(p, b, e);
        return !(p == "123" && b == Dir::inc && e == Dir::inc);
    }

    const std::vector<BigInt>& get(const std::string& pat, Dir bd, int k, Dir ed, int l) {
        if (k < 1 || l < 1) throw std::invalid_argument("window lengths must be >= 1");
        std::string p = pat;
        Dir b = bd, e = ed;
        int kk = k, ll = l;
        if (mirror(p, b, e)) std::swap(kk, ll);
        if (!covered(p, b, e))
            throw std::invalid_argument("no registered recurrence for " + pat + ":" +
                                        dir_name(bd) + "," + dir_name(ed));
        Key key{p, b, kk, e, ll};
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            if (it->second.empty())
                throw std::logic_error("recurrence dependency cycle");
            return it->second;
        }
        memo_[key] = {};  // in-progress marker
        std::vector<BigInt> v = compute(p, b, kk, e, ll);
        return memo_[key] = std::move(v);
    }

private:
    using Key = std::tuple<std::string, Dir, int, Dir, int>;
    BaseProvider& base_;
    int n_max_;
    std::map<Key, std::vector<BigInt>> memo_;

    // Rewrites a family to its canonical sibling; returns true when the
    // windows must be swapped (reverse-complement applied).
    static bool mirror(std::string& pat, Dir& bd, Dir& ed) {
        auto swap_to = [&](const char* target) {
            pat = target;
            std::swap(bd, ed);
            return true;
        };
        if (pat == "132") return swap_to("213");
        if (pat == "21-3") return swap_to("1-32");
        if (pat == "12-3") return swap_to("1-23");
        if (pat == "123" && bd == Dir::inc && ed == Dir::dec) {
            std::swap(bd, ed);
            return true;
        }
        return false;
    }

    GeneralizedPattern pattern(const std::string& s) const {
        return GeneralizedPattern::parse(s);
    }

    std::vector<BigInt> zeros() const { return std::vector<BigInt>(n_max_ + 1, BigInt(0)); }

    std::vector<BigInt> from_base(const GeneralizedPattern& p, Dir d, int k) {
        std::vector<BigInt> v = zeros();
        for (int m = 1; m <= n_max_; ++m) v[m] = base_.one_sided(p, d, k, m);
        return v;
    }

    void seed_overlaps(std::vector<BigInt>& v, const GeneralizedPattern& p, Dir bd, int k,
                       Dir ed, int l) {
        // Initial conditions where the two windows can overlap in more than
        // one letter; the positional recurrences start above that.
        for (int m = 1; m <= std::min(n_max_, k + l - 2); ++m)
            v[m] = base_.two_sided(p, bd, k, ed, l, m);
    }

    // Left factor of the convolution terms: permutations that satisfy the
    // begin window and do not end with a descent (a length-1 word satisfies
    // that vacuously, so only the window condition remains there).
    BigInt left_no_final_descent(const std::string& pat, Dir bd, int k, int m) {
        if (m <= 0) return 0;
        if (m == 1) return k == 1 ? 1 : 0;
        return get(pat, bd, k, Dir::inc, 2)[m];
    }

    std::vector<BigInt> compute(const std::string& pat, Dir bd, int k, Dir ed, int l) {
        if (pat == "213") return compute_213(bd, k, ed, l);
        if (pat == "123") return compute_123(bd, k, ed, l);
        if (pat == "1-32") return compute_1_32(bd, k, ed, l);
        if (pat == "1-23") return compute_1_23(bd, k, ed, l);
        throw std::logic_error("unexpected family");
    }

    // Contiguous 213. Placing the maximum splits the permutation; the part
    // left of the maximum may not end with a descent (it would complete a
    // 213 with the maximum), the part right of it is a one-sided class of
    // the companion pattern 132.
    std::vector<BigInt> compute_213(Dir bd, int k, Dir ed, int l) {
        auto p213 = pattern("213");
        auto p132 = pattern("132");
        std::vector<BigInt> v = zeros();
        if (l == 1) return from_base(p213, bd, k);
        if (bd == Dir::dec && k == 1) return from_base(p132, ed, l);  // begin window trivial
        seed_overlaps(v, p213, bd, k, ed, l);
        const std::vector<BigInt>* chain =
            bd == Dir::dec ? &get("213", Dir::dec, k - 1, ed, l) : nullptr;
        const std::vector<BigInt>* shorter =
            ed == Dir::inc && l >= 3 ? &get("213", bd, k, Dir::inc, l - 1) : nullptr;
        // Left parts that satisfy the begin window and do not end in a
        // descent; the end-12 family itself when that is what we are filling.
        auto lf12 = [&](int m) -> BigInt {
            if (m <= 0) return 0;
            if (m == 1) return k == 1 ? 1 : 0;
            if (ed == Dir::inc && l == 2) return v[m];
            return left_no_final_descent("213", bd, k, m);
        };
        for (int m = std::max(1, k + l - 1); m <= n_max_; ++m) {
            BigInt total = 0;
            if (bd == Dir::inc)
                total += binomial(m - 1, k - 1) * base_.one_sided(p132, ed, l, m - k);
            else
                total += (*chain)[m - 1];
            for (int i = 1; i <= m - 2; ++i) {
                BigInt lf = lf12(i);
                if (lf == 0) continue;
                total += binomial(m - 1, i) * lf * base_.one_sided(p132, ed, l, m - 1 - i);
            }
            if (ed == Dir::inc) {
                total += l == 2 ? lf12(m - 1) : (*shorter)[m - 1];
            } else {
                total += binomial(m - 1, l - 1) * lf12(m - l);
                if (bd == Dir::inc && m == k + l - 1) total += binomial(k + l - 2, k - 1);
            }
            v[m] = total;
        }
        return v;
    }

    // Contiguous 123 with at least one decreasing window. The decreasing/
    // increasing pair with window length 2 is the self-starting equation the
    // other cases hang off; end windows 12..l with l >= 3 are impossible.
    std::vector<BigInt> compute_123(Dir bd, int k, Dir ed, int l) {
        if (bd != Dir::dec) throw std::logic_error("mirrored family reached compute_123");
        auto p123 = pattern("123");
        std::vector<BigInt> v = zeros();
        if (ed == Dir::inc) {
            if (l >= 3) return v;
            if (l == 1) return from_base(p123, Dir::dec, k);
            // end window 12: v[m] = sum binom(m-1,i) u(i) w(m-1-i) where
            // u(i) counts begin-21/end-12 avoiders (plus the length-1 word)
            // and w(j) counts begin-window avoiders (plus the bare window).
            const std::vector<BigInt>* p2 = nullptr;
            if (k != 2) p2 = &get("123", Dir::dec, 2, Dir::inc, 2);
            for (int m = 1; m <= n_max_; ++m) {
                BigInt total = 0;
                for (int i = 0; i <= m - 1; ++i) {
                    BigInt u = (k == 2 ? v[i] : (*p2)[i]) + (i == 1 ? 1 : 0);
                    if (u == 0) continue;
                    int j = m - 1 - i;
                    BigInt w = base_.one_sided(p123, Dir::dec, k, j) + (j == k - 1 ? 1 : 0);
                    total += binomial(m - 1, i) * u * w;
                }
                v[m] = total;
            }
            return v;
        }
        // Both windows decreasing.
        if (l == 1) return from_base(p123, Dir::dec, k);
        if (k == 1) return from_base(p123, Dir::dec, l);  // begin window trivial
        if (l == 2) {
            // Complement split: every avoider of length >= 2 ends with
            // either a rise or a descent.
            const auto& rise = get("123", Dir::dec, k, Dir::inc, 2);
            for (int m = 2; m <= n_max_; ++m)
                v[m] = base_.one_sided(p123, Dir::dec, k, m) - rise[m];
            return v;
        }
        seed_overlaps(v, p123, Dir::dec, k, Dir::dec, l);
        const auto& chain = get("123", Dir::dec, k - 1, Dir::dec, l);
        const auto& end21 = get("123", Dir::dec, k, Dir::dec, 2);
        for (int m = std::max(1, k + l - 1); m <= n_max_; ++m) {
            BigInt total = chain[m - 1];
            for (int i = 2; i <= m - 2; ++i) {
                if (end21[i] == 0) continue;
                total += binomial(m - 1, i) * end21[i] *
                         base_.one_sided(p123, Dir::dec, l, m - 1 - i);
            }
            total += binomial(m - 1, l - 1) * (m - l >= 2 ? end21[m - l] : BigInt(0));
            v[m] = total;
        }
        return v;
    }

    // Pattern 1-32. Position sums over the maximum give closed expressions:
    // with an increasing end window the letters left of the maximum are
    // increasing; with a decreasing end window the least letter is pinned to
    // the right end, which shifts the index, and decreasing permutations
    // whose windows overlap in more than one letter are added back.
    std::vector<BigInt> compute_1_32(Dir bd, int k, Dir ed, int l) {
        auto p = pattern("1-32");
        std::vector<BigInt> v = zeros();
        if (ed == Dir::dec) {
            for (int m = 1; m <= n_max_; ++m) {
                BigInt t = m - l + 1 >= 1 ? base_.one_sided(p, bd, k, m - l + 1) : 0;
                if (bd == Dir::dec && m >= std::max(k, l) && m <= k + l - 2) t += 1;
                v[m] = t;
            }
            return v;
        }
        if (l == 1) return from_base(p, bd, k);
        for (int m = 1; m <= n_max_; ++m) {
            BigInt total = 0;
            for (int i = l; i <= m - 1; ++i)
                total += binomial(m - 1, i - 1) * base_.one_sided(p, bd, k, m - i);
            if (bd == Dir::inc && m >= std::max(l, k)) total += 1;
            if (bd == Dir::dec && m >= k + l - 1) total += binomial(m - 1, k - 1);
            v[m] = total;
        }
        return v;
    }

    // Pattern 1-23. Increasing windows longer than 2 already contain the
    // pattern; the rest follows the placement of the maximum (after a
    // reverse-complement to the 12-3 picture) or of the least letter.
    std::vector<BigInt> compute_1_23(Dir bd, int k, Dir ed, int l) {
        auto p1_23 = pattern("1-23");
        auto p12_3 = pattern("12-3");
        std::vector<BigInt> v = zeros();
        if (bd == Dir::inc && k >= 3) return v;
        if (ed == Dir::inc && l >= 3) return v;
        if (ed == Dir::inc) {
            if (l == 1) return from_base(p1_23, bd, k);
            if (bd == Dir::inc && k == 1) return from_base(p12_3, Dir::inc, l);
            // end window 12: the least letter sits next to the right end.
            for (int m = 2; m <= n_max_; ++m) {
                BigInt t = BigInt(m - 1) * base_.one_sided(p1_23, bd, k, m - 2);
                if (bd == Dir::dec && m - 1 == k) t += m - 1;
                if (bd == Dir::inc && k == 2 && m == 2) t += 1;  // the word 12 itself
                v[m] = t;
            }
            return v;
        }
        // ed == dec
        if (l == 1) return from_base(p1_23, bd, k);
        if (k == 1) return from_base(p12_3, Dir::dec, l);
        if (bd == Dir::inc) {
            // k == 2: maximum first, strictly inside, or last.
            const auto& chain = get("1-23", Dir::inc, 2, Dir::dec, l - 1);
            for (int m = l + 1; m <= n_max_; ++m) {
                BigInt total = 1 + chain[m - 1];
                for (int j = l + 1; j <= m - 2; ++j)
                    total += binomial(m - 1, j - 1) * base_.one_sided(p1_23, Dir::inc, 2, m - j);
                v[m] = total;
            }
            return v;
        }
        // both windows decreasing, k >= 2
        seed_overlaps(v, p1_23, Dir::dec, k, Dir::dec, l);
        const auto& chain = get("1-23", Dir::dec, k, Dir::dec, l - 1);
        for (int m = std::max(1, k + l - 1); m <= n_max_; ++m) {
            BigInt total = chain[m - 1];
            for (int i = l; i <= m - 1; ++i) {
                int j = m - 1 - i;
                total += binomial(m - 1, i) *
                         (base_.one_sided(p1_23, Dir::dec, k, j) + (j == k - 1 ? 1 : 0));
            }
            v[m] = total;
        }
        return v;
    }
};

// One registered family as a sequence record; family ids look like
// "1-32:inc,dec".
inline SequenceRecord two_sided_recurrence(const std::string& family_id, int k, int l,
                                           int n_max, BaseProvider& base) {
    auto colon = family_id.find(':');
    auto comma = family_id.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos)
        throw std::invalid_argument("family id must look like <pattern>:<dir>,<dir>");
    std::string pat = family_id.substr(0, colon);
    auto parse_dir = [&](std::string s) {
        if (s == "inc") return Dir::inc;
        if (s == "dec") return Dir::dec;
        throw std::invalid_argument("direction must be inc or dec: " + s);
    };
    Dir bd = parse_dir(family_id.substr(colon + 1, comma - colon - 1));
    Dir ed = parse_dir(family_id.substr(comma + 1));
    TwoSidedRecurrences rec(base, n_max);
    SequenceRecord out;
    out.values = rec.get(pat, bd, k, ed, l);
    out.provenance = "recurrence";
    std::ostringstream os;
    os << family_id << ";k=" << k << ";l=" << l;
    out.spec = os.str();
    out.name = "avoid " + pat + ", begin " + monotone(bd, k).str() + ", end " +
               monotone(ed, l).str();
    return out;
}

// --- exactly-once identities -------------------------------------------------

// Permutations containing 12-3 exactly once that begin with an increasing
// window of length k (and end with the trivial window). F supplies the
// unrestricted exactly-once counts, in practice from the oracle.
//
// For k = 2 the first term splits off the permutations whose second letter
// is the maximum: the maximum then sits in no occurrence, the remaining
// n-2 letters must contain the pattern exactly once, and the first letter
// can be chosen n-1 ways -- hence (n-1) F_{n-2}.
inline BigInt exactly_once_12_3(int n, int k, const std::function<BigInt(int)>& F) {
    if (n < 3) throw std::invalid_argument("defined for n >= 3");
    if (k < 1) throw std::invalid_argument("window length must be >= 1");
    if (k == 1) return F(n);
    if (k == 2) return BigInt(n - 1) * F(n - 2) + BigInt(n - 2) * bell(n - 2);
    if (k == 3) return BigInt(n - 2) * bell(n - 3);
    return 0;
}

}  // namespace gpav::counting
