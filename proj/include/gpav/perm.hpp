#pragma once

// Core vocabulary: one-line permutations, dashed patterns (adjacency flags),
// occurrence counting, prefix/suffix window tests, and the trivial
// bijections reverse / complement / reverse-complement.
//
// Everything here is an immutable value; all functions are pure.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpav {

struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
};

// A permutation of {1..n} in one-line notation. n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
        validate();
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return Permutation(std::move(w));
    }

    static Permutation decreasing(int n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = n - i;
        return Permutation(std::move(w));
    }

    // Accepts a digit string ("45231"), or integers separated by spaces/commas.
    static Permutation parse(std::string_view text);

    int size() const { return (int)letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int operator[](int i) const { return letters_[i]; }  // 0-based

    std::string str() const {
        std::ostringstream os;
        if (size() <= 9) {
            for (int v : letters_) os << v;
        } else {
            for (int i = 0; i < size(); ++i) os << (i ? " " : "") << letters_[i];
        }
        return os.str();
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;

    void validate() const {
        int n = (int)letters_.size();
        std::vector<bool> seen(n + 1, false);
        for (int v : letters_) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("permutation letters must be exactly 1..n");
            seen[v] = true;
        }
    }
};

// A pattern with dash structure. adjacent[i] == true means letters i and i+1
// carry no dash, so a match must use consecutive positions there.
// All flags false = classical pattern; all true = contiguous subword.
struct GeneralizedPattern {
    Permutation letters;
    std::vector<bool> adjacent;

    GeneralizedPattern() = default;
    GeneralizedPattern(Permutation p, std::vector<bool> adj)
        : letters(std::move(p)), adjacent(std::move(adj)) {
        if (letters.size() < 1) throw std::invalid_argument("pattern must be nonempty");
        if ((int)adjacent.size() != letters.size() - 1)
            throw std::invalid_argument("adjacency flag list must have length m-1");
    }

    static GeneralizedPattern classical(Permutation p) {
        std::vector<bool> adj(p.size() >= 1 ? p.size() - 1 : 0, false);
        return GeneralizedPattern(std::move(p), std::move(adj));
    }
    static GeneralizedPattern contiguous(Permutation p) {
        std::vector<bool> adj(p.size() >= 1 ? p.size() - 1 : 0, true);
        return GeneralizedPattern(std::move(p), std::move(adj));
    }

    // Grammar: digit (('-')? digit)*, digits a permutation of 1..m, m <= 9.
    static GeneralizedPattern parse(std::string_view text);

    int size() const { return letters.size(); }
    bool is_classical() const {
        return std::none_of(adjacent.begin(), adjacent.end(), [](bool b) { return b; });
    }
    bool is_contiguous() const {
        return std::all_of(adjacent.begin(), adjacent.end(), [](bool b) { return b; });
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < size(); ++i) {
            if (i > 0 && !adjacent[i - 1]) os << '-';
            os << letters[i];
        }
        return os.str();
    }

    friend bool operator==(const GeneralizedPattern& a, const GeneralizedPattern& b) {
        return a.letters == b.letters && a.adjacent == b.adjacent;
    }
    friend bool operator<(const GeneralizedPattern& a, const GeneralizedPattern& b) {
        if (a.letters == b.letters) return a.adjacent < b.adjacent;
        return a.letters < b.letters;
    }
};

inline Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    bool separated = text.find_first_of(", \t") != std::string_view::npos;
    if (separated) {
        std::string cur;
        auto flush = [&](std::size_t at) {
            if (cur.empty()) return;
            vals.push_back(std::stoi(cur));
            cur.clear();
            (void)at;
        };
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (std::isdigit((unsigned char)c)) {
                cur += c;
            } else if (c == ',' || c == ' ' || c == '\t') {
                flush(i);
            } else {
                throw parse_error("unexpected character in permutation", i);
            }
        }
        flush(text.size());
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (!std::isdigit((unsigned char)c))
                throw parse_error("unexpected character in permutation", i);
            vals.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(vals));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
}

inline GeneralizedPattern GeneralizedPattern::parse(std::string_view text) {
    std::vector<int> vals;
    std::vector<bool> adj;
    bool expect_digit = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit((unsigned char)c)) {
            if (c == '0') throw parse_error("pattern letters are 1..9", i);
            if (!expect_digit) adj.push_back(true);  // two digits with no dash
            vals.push_back(c - '0');
            expect_digit = false;
        } else if (c == '-') {
            if (expect_digit) throw parse_error("dash must sit between two letters", i);
            adj.push_back(false);
            expect_digit = true;
        } else {
            throw parse_error("unexpected character in pattern", i);
        }
    }
    if (vals.empty()) throw parse_error("empty pattern", 0);
    if (expect_digit) throw parse_error("pattern ends with a dash", text.size() - 1);
    int m = (int)vals.size();
    if (m > 9) throw parse_error("pattern longer than 9 letters", 9);
    std::vector<bool> seen(m + 1, false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] > m || seen[vals[i]])
            throw parse_error("pattern letters must form a permutation of 1..m", i);
        seen[vals[i]] = true;
    }
    return GeneralizedPattern(Permutation(std::move(vals)), std::move(adj));
}

// --- occurrence counting -------------------------------------------------
//
// Words handed to these helpers need not be full permutations; any sequence
// of distinct integers works, since only relative order matters. That lets
// the enumeration engine test prefixes directly.

namespace detail {

// Extends a partial match: the j-th pattern letter placed at word position
// `cand` must relate to every earlier chosen letter as in the pattern.
inline bool order_compatible(const GeneralizedPattern& p, std::span<const int> w,
                             const std::vector<int>& pos, int j, int cand) {
    for (int a = 0; a < j; ++a) {
        bool wl = w[pos[a]] < w[cand];
        bool pl = p.letters[a] < p.letters[j];
        if (wl != pl) return false;
    }
    return true;
}

inline std::int64_t count_matches(const GeneralizedPattern& p, std::span<const int> w,
                                  int fixed_last /* -1 = unconstrained */) {
    const int m = p.size();
    const int n = (int)w.size();
    if (m > n) return 0;
    if (fixed_last >= 0 && p.is_contiguous()) {
        // Anchored contiguous match sits at positions fixed_last-m+1..fixed_last.
        int start = fixed_last - m + 1;
        if (start < 0) return 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if ((w[start + i] < w[start + j]) != (p.letters[i] < p.letters[j])) return 0;
        return 1;
    }
    std::vector<int> pos(m);
    std::int64_t total = 0;
    // Plain backtracking over index tuples with adjacency short-circuit.
    std::function<void(int, int)> go = [&](int j, int lo) {
        if (j == m) {
            ++total;
            return;
        }
        bool chained = j > 0 && p.adjacent[j - 1];
        int first = chained ? pos[j - 1] + 1 : lo;
        int last = chained ? pos[j - 1] + 1 : n - (m - j);
        for (int cand = first; cand <= last && cand < n; ++cand) {
            if (fixed_last >= 0) {
                if (j == m - 1 && cand != fixed_last) continue;
                if (cand > fixed_last) break;
            }
            if (!order_compatible(p, w, pos, j, cand)) continue;
            pos[j] = cand;
            go(j + 1, cand + 1);
        }
    };
    go(0, 0);
    return total;
}

}  // namespace detail

inline std::int64_t occurrences(const GeneralizedPattern& p, std::span<const int> word) {
    return detail::count_matches(p, word, -1);
}
inline std::int64_t occurrences(const GeneralizedPattern& p, const Permutation& pi) {
    return detail::count_matches(p, pi.letters(), -1);
}

// Occurrences whose last matched position is exactly `last`. The enumeration
// engine calls this after each appended letter: occurrences never disappear
// when a word grows, so counting only the newly completed ones is sound.
inline std::int64_t occurrences_ending_at(const GeneralizedPattern& p,
                                          std::span<const int> word, int last) {
    return detail::count_matches(p, word, last);
}

inline bool avoids(const GeneralizedPattern& p, const Permutation& pi) {
    return occurrences(p, pi) == 0;
}
inline bool avoids(const GeneralizedPattern& p, std::span<const int> word) {
    return occurrences(p, word) == 0;
}

// --- prefix / suffix windows ---------------------------------------------

namespace detail {
inline bool order_isomorphic(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    return true;
}
}  // namespace detail

// First |q| letters order-isomorphic to q. The empty permutation begins with
// no pattern; prefix and suffix windows may overlap.
inline bool begins_with(const Permutation& pi, const Permutation& q) {
    if (q.empty()) throw std::invalid_argument("begin pattern must be nonempty");
    if (pi.size() < q.size()) return false;
    return detail::order_isomorphic(
        std::span<const int>(pi.letters()).first(q.size()), q.letters());
}

inline bool ends_with(const Permutation& pi, const Permutation& r) {
    if (r.empty()) throw std::invalid_argument("end pattern must be nonempty");
    if (pi.size() < r.size()) return false;
    return detail::order_isomorphic(
        std::span<const int>(pi.letters()).last(r.size()), r.letters());
}

// --- trivial bijections ---------------------------------------------------

inline Permutation reverse(const Permutation& pi) {
    std::vector<int> w(pi.letters().rbegin(), pi.letters().rend());
    return Permutation(std::move(w));
}

inline Permutation complement(const Permutation& pi) {
    int n = pi.size();
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n + 1 - pi[i];
    return Permutation(std::move(w));
}

inline Permutation reverse_complement(const Permutation& pi) {
    return reverse(complement(pi));
}

// For patterns the letters transform the same way; the adjacency flags are
// reversed under R and unchanged under C.
inline GeneralizedPattern reverse(const GeneralizedPattern& p) {
    std::vector<bool> adj(p.adjacent.rbegin(), p.adjacent.rend());
    return GeneralizedPattern(reverse(p.letters), std::move(adj));
}

inline GeneralizedPattern complement(const GeneralizedPattern& p) {
    return GeneralizedPattern(complement(p.letters), p.adjacent);
}

inline GeneralizedPattern reverse_complement(const GeneralizedPattern& p) {
    return reverse(complement(p));
}

// Monotone window helpers: increasing 12..k / decreasing k..21.
enum class Dir { inc, dec };

inline Permutation monotone(Dir d, int k) {
    return d == Dir::inc ? Permutation::identity(k) : Permutation::decreasing(k);
}

inline const char* dir_name(Dir d) { return d == Dir::inc ? "inc" : "dec"; }

}  // namespace gpav
