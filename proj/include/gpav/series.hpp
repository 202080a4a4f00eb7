#pragma once

// Truncated power series in two flavours: exact rationals for the ordinary
// generating functions (everything is Catalan arithmetic there) and doubles
// for the exponential ones (secants, tangents and iterated exponentials).
// A series carries `order`: coefficients at indices >= order are unknown,
// not zero. Arithmetic never reads past the order; binary operations return
// the smaller order and definite integration from 0 extends it by one.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpav/arith.hpp"
#include "gpav/perm.hpp"

namespace gpav::series {

inline constexpr int default_exact_order = 24;
inline constexpr int default_float_order = 14;
inline constexpr int float_order_cap = 16;  // double precision budget

template <typename Coef>
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Coef> c) : c_(std::move(c)) {}

    static Series zero(int order) { return Series(std::vector<Coef>(order, Coef(0))); }
    static Series constant(Coef v, int order) {
        Series s = zero(order);
        if (order > 0) s.c_[0] = std::move(v);
        return s;
    }
    // c * x^k
    static Series monomial(Coef v, int k, int order) {
        Series s = zero(order);
        if (k < order) s.c_[k] = std::move(v);
        return s;
    }

    int order() const { return (int)c_.size(); }
    const std::vector<Coef>& coeffs() const { return c_; }
    const Coef& operator[](int i) const { return c_[i]; }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r = zero(n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r = zero(n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r = zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    Series scaled(const Coef& v) const {
        Series r = *this;
        for (auto& x : r.c_) x *= v;
        return r;
    }

    Series shifted(int k) const {  // multiply by x^k, same order
        Series r = zero(order());
        for (int i = order() - 1; i >= k; --i) r.c_[i] = c_[i - k];
        return r;
    }

    Series pow(int e) const {
        Series r = constant(Coef(1), order());
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Series reciprocal() const {
        if (order() == 0 || c_[0] == Coef(0))
            throw std::domain_error("series reciprocal needs a nonzero constant term");
        Series r = zero(order());
        r.c_[0] = Coef(1) / c_[0];
        for (int n = 1; n < order(); ++n) {
            Coef acc(0);
            for (int i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
            r.c_[n] = -acc / c_[0];
        }
        return r;
    }

    // Definite integral from 0; the constant term is 0 and the known range
    // grows by one.
    Series integrated() const {
        Series r = zero(order() + 1);
        for (int i = 0; i < order(); ++i) r.c_[i + 1] = c_[i] / Coef(i + 1);
        return r;
    }

    Series differentiated() const {
        if (order() == 0) throw std::domain_error("cannot differentiate an empty series");
        Series r = zero(order() - 1);
        for (int i = 0; i + 1 < order(); ++i) r.c_[i] = c_[i + 1] * Coef(i + 1);
        return r;
    }

private:
    std::vector<Coef> c_;
};

using RationalSeries = Series<BigRat>;
using FloatSeries = Series<double>;

// --- exact side -------------------------------------------------------------

inline RationalSeries catalan_series(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<BigRat> c(order);
    for (int i = 0; i < order; ++i) c[i] = BigRat(catalan(i));
    return RationalSeries(std::move(c));
}

// Sum_{j=lo..hi} x^j (the monotone-overlap correction polynomial).
inline RationalSeries geometric_block(int lo, int hi, int order) {
    RationalSeries r = RationalSeries::zero(order);
    for (int j = lo; j <= hi && j < order; ++j) r = r + RationalSeries::monomial(BigRat(1), j, order);
    return r;
}

// Sum_{d>=0} x^d / ((1-x)(1-2x)...(1-dx)), truncated at d = order; the
// coefficients are the Bell numbers. Kept exact; converted to the float
// flavour only on demand.
inline RationalSeries bell_rational_sum(int order) {
    RationalSeries acc = RationalSeries::zero(order);
    RationalSeries prod = RationalSeries::constant(BigRat(1), order);
    for (int d = 0; d < order; ++d) {
        if (d > 0) {
            RationalSeries factor = RationalSeries::constant(BigRat(1), order) -
                                    RationalSeries::monomial(BigRat(d), 1, order);
            prod = prod * factor.reciprocal();
        }
        acc = acc + prod.shifted(d);
    }
    return acc;
}

// Reinterpret exact ordinary coefficients as float exponential ones
// (c_n := a_n / n!), so n! * c_n recovers the counts.
inline FloatSeries ogf_to_egf(const RationalSeries& s) {
    std::vector<double> c(s.order());
    BigInt fact = 1;
    for (int n = 0; n < s.order(); ++n) {
        if (n > 0) fact *= n;
        BigRat v = s[n] / BigRat(fact);
        c[n] = (double)boost::multiprecision::numerator(v) /
               (double)boost::multiprecision::denominator(v);
    }
    return FloatSeries(std::move(c));
}

// --- float side -------------------------------------------------------------

enum class Transcendental { exp, sin_affine, cos_affine, sec_affine, tan_affine };

// Taylor expansion of f(a*x + b) about 0.
inline FloatSeries float_transcendental(Transcendental kind, double a, double b, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<double> c(order);
    auto fill = [&](auto deriv_at_b) {
        double an = 1.0, fact = 1.0;
        for (int n = 0; n < order; ++n) {
            if (n > 0) an *= a, fact *= n;
            c[n] = an * deriv_at_b(n) / fact;
        }
    };
    switch (kind) {
        case Transcendental::exp:
            fill([&](int) { return std::exp(b); });
            return FloatSeries(std::move(c));
        case Transcendental::sin_affine:
            fill([&](int n) { return std::sin(b + n * M_PI / 2); });
            return FloatSeries(std::move(c));
        case Transcendental::cos_affine:
            fill([&](int n) { return std::cos(b + n * M_PI / 2); });
            return FloatSeries(std::move(c));
        case Transcendental::sec_affine: {
            if (std::abs(std::cos(b)) < 1e-12)
                throw std::domain_error("sec undefined: cos(offset) = 0");
            return float_transcendental(Transcendental::cos_affine, a, b, order).reciprocal();
        }
        case Transcendental::tan_affine:
            return float_transcendental(Transcendental::sin_affine, a, b, order) *
                   float_transcendental(Transcendental::sec_affine, a, b, order);
    }
    throw std::logic_error("unreachable");
}

// exp of a series (general constant term; the tail runs through the
// derivative recurrence h' = g' h).
inline FloatSeries exp_of(const FloatSeries& f) {
    int n = f.order();
    if (n == 0) return f;
    std::vector<double> h(n, 0.0);
    h[0] = 1.0;
    for (int m = 1; m < n; ++m) {
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) acc += i * f[i] * h[m - i];
        h[m] = acc / m;
    }
    FloatSeries r(std::move(h));
    return r.scaled(std::exp(f[0]));
}

// Sum_{j >= from} x^j / j!
inline FloatSeries exp_tail(int from, int order) {
    std::vector<double> c(order, 0.0);
    double fact = 1.0;
    for (int j = 0; j < order; ++j) {
        if (j > 0) fact *= j;
        if (j >= from) c[j] = 1.0 / fact;
    }
    return FloatSeries(std::move(c));
}

inline FloatSeries monomial_over_factorial(int k, int order) {  // x^k / k!
    double fact = 1.0;
    for (int j = 2; j <= k; ++j) fact *= j;
    return FloatSeries::monomial(1.0 / fact, k, order);
}

// --- coefficient extraction --------------------------------------------------

inline BigInt counts_from_series(const RationalSeries& s, int n) {
    if (n < 0 || n >= s.order())
        throw std::out_of_range("coefficient index beyond series order");
    const BigRat& v = s[n];
    if (boost::multiprecision::denominator(v) != 1)
        throw std::runtime_error("exact coefficient at n=" + std::to_string(n) +
                                 " is not an integer: " + v.str());
    return BigInt(boost::multiprecision::numerator(v));
}

// n! * c_n rounded, under the tolerance contract: the absolute rounding gap
// must stay below 0.5 and the relative residual below 1e-6, otherwise the
// coefficient cannot be trusted as a count and we report which n failed.
inline BigInt counts_from_series(const FloatSeries& s, int n) {
    if (n < 0 || n >= s.order())
        throw std::out_of_range("coefficient index beyond series order");
    double fact = 1.0;
    for (int j = 2; j <= n; ++j) fact *= j;
    double v = s[n] * fact;
    double rounded = std::round(v);
    double gap = std::abs(v - rounded);
    if (gap >= 0.5 || gap / std::max(1.0, std::abs(rounded)) > 1e-6)
        throw std::runtime_error("float coefficient at n=" + std::to_string(n) +
                                 " fails the rounding contract: " + std::to_string(v));
    return BigInt((long long)rounded);
}

// --- ordinary generating functions -------------------------------------------
//
// Family ids: "<pattern>:<dir>" (one-sided window at the front) or
// "<pattern>:<dir>,<dir>" (windows at both ends), with window lengths k and
// l supplied separately. All are powers of the Catalan series times x^j,
// plus the correction polynomial counting the short monotone permutations
// whose two windows overlap in more than one letter.

struct FamilyId {
    std::string pattern;
    Dir bd = Dir::inc;
    Dir ed = Dir::inc;
    bool two_sided = false;
};

inline FamilyId parse_family(const std::string& id) {
    auto colon = id.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family id must look like <pattern>:<dir>[,<dir>]");
    auto dir_of = [&](const std::string& s) {
        if (s == "inc") return Dir::inc;
        if (s == "dec") return Dir::dec;
        throw std::invalid_argument("direction must be inc or dec: " + s);
    };
    FamilyId f;
    f.pattern = id.substr(0, colon);
    std::string rest = id.substr(colon + 1);
    auto comma = rest.find(',');
    if (comma == std::string::npos) {
        f.bd = dir_of(rest);
    } else {
        f.two_sided = true;
        f.bd = dir_of(rest.substr(0, comma));
        f.ed = dir_of(rest.substr(comma + 1));
    }
    return f;
}

// Coefficient of y^k z^l in the shared two-window generating function
//   (x(y+z+yz) + (C(x)-1) / ((1-xyC)(1-xzC))) / (1 - x(y+z)),
// expanded to the needed bidegree; the same expression serves all four
// pattern families, each reading (k, l) as its own window pair.
inline RationalSeries trivariate_coeff(const std::string& family, int k, int l, int order) {
    if (!(family == "1-3-2" || family == "2-1-3" || family == "2-13" || family == "13-2"))
        throw std::invalid_argument("no two-window generating function for " + family);
    if (k < 0 || l < 0) throw std::invalid_argument("window lengths must be >= 0");
    RationalSeries C = catalan_series(order);
    RationalSeries Cm1 = C - RationalSeries::constant(BigRat(1), order);
    RationalSeries acc = RationalSeries::zero(order);
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= l; ++b) {
            // geometric factor contributes x^{(k-a)+(l-b)} * binom(k-a+l-b, k-a)
            int g = (k - a) + (l - b);
            BigRat weight(binomial(g, k - a));
            RationalSeries inner = Cm1 * C.pow(a + b);
            inner = inner.shifted(a + b);
            bool delta = (a == 1 && b == 0) || (a == 0 && b == 1) || (a == 1 && b == 1);
            if (delta) inner = inner + RationalSeries::monomial(BigRat(1), 1, order);
            acc = acc + inner.shifted(g).scaled(weight);
        }
    }
    return acc;
}

inline RationalSeries ogf_formula(const std::string& family_id, int k, int l, int order) {
    auto f = parse_family(family_id);
    if (k < 1 || (f.two_sided && l < 1))
        throw std::invalid_argument("window lengths must be >= 1");
    if (order < k + (f.two_sided ? l : 1))
        throw std::invalid_argument("order must cover the windows (>= k + l)");
    RationalSeries C = catalan_series(order);
    auto xpow_cpow = [&](int xp, int cp) { return C.pow(cp).shifted(xp); };
    auto overlap = [&](void) {
        return geometric_block(std::max(k, l), k + l - 2, order);
    };
    const std::string& p = f.pattern;
    if (!f.two_sided) {
        if (p == "1-3-2") return f.bd == Dir::inc ? xpow_cpow(k, 2) : xpow_cpow(k, k + 1);
        if (p == "2-1-3" || p == "2-13")
            return f.bd == Dir::inc ? xpow_cpow(k, k + 1) : xpow_cpow(k, 2);
        if (p == "1-2-3") {
            if (f.bd != Dir::inc)
                throw std::invalid_argument("no registered formula for " + family_id);
            if (k >= 3) return RationalSeries::zero(order);
            return k == 2 ? xpow_cpow(2, 2) : xpow_cpow(1, 2);
        }
        throw std::invalid_argument("no registered formula for " + family_id);
    }
    bool bi = f.bd == Dir::inc, ei = f.ed == Dir::inc;
    if (p == "1-3-2") {
        if (bi && ei) return xpow_cpow(k + l - 1, l + 1) + overlap();
        if (bi && !ei) return xpow_cpow(k + l - 1, 2);
        if (!bi && !ei) return xpow_cpow(k + l - 1, k + 1) + overlap();
        return trivariate_coeff(p, k, l, order);  // dec/inc
    }
    if (p == "2-1-3" || p == "2-13") {
        if (bi && ei) return xpow_cpow(k + l - 1, k + 1) + overlap();
        if (!bi && ei) return xpow_cpow(k + l - 1, 2);
        if (!bi && !ei) return xpow_cpow(k + l - 1, l + 1) + overlap();
        return trivariate_coeff(p, k, l, order);  // inc/dec
    }
    if (p == "13-2") {
        if (bi && ei) return xpow_cpow(k + l - 1, l + 1) + overlap();
        if (bi && !ei) return xpow_cpow(k + l - 1, 2);
        if (!bi && !ei) return xpow_cpow(k + l - 1, k + 1) + overlap();
        return trivariate_coeff(p, k, l, order);  // dec/inc
    }
    throw std::invalid_argument("no registered formula for " + family_id);
}

inline bool has_ogf(const std::string& family_id) {
    try {
        ogf_formula(family_id, 1, 1, 2);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// --- exponential generating functions ----------------------------------------
//
// Every registered family keeps an honest constant term: the coefficient of
// x^0 is 0 because a window constraint rules out the empty permutation. The
// Bell-type bases therefore enter as e^{e^x-1} - 1 where a begin window of
// length 1 is involved.

namespace detail {

inline double r3h() { return std::sqrt(3.0) / 2.0; }

inline FloatSeries sec_six(int order) {
    return float_transcendental(Transcendental::sec_affine, r3h(), M_PI / 6, order);
}

// Phi_j: avoiders of contiguous 123 beginning with a decreasing window of
// length j (by reverse-complement also those ending with one):
//   (e^{x/2}/(j-1)!) sec(r3h x + pi/6) Int_0^x e^{-t/2} t^{j-1} sin(r3h t + pi/3) dt.
inline FloatSeries phi(int j, int order) {
    FloatSeries inner = float_transcendental(Transcendental::exp, -0.5, 0.0, order) *
                        float_transcendental(Transcendental::sin_affine, r3h(), M_PI / 3, order) *
                        monomial_over_factorial(j - 1, order);
    return float_transcendental(Transcendental::exp, 0.5, 0.0, order) * sec_six(order) *
           inner.integrated();
}

// Contiguous-123 avoiders with a decreasing front window of length j and a
// final rise:
//   Int_0^x sec(..)(sin(r3h t + pi/3) - r3h e^{-t/2}) (Phi_j(t) + t^{j-1}/(j-1)!) dt.
inline FloatSeries e123_dec_then_rise(int j, int order) {
    FloatSeries weight =
        sec_six(order) *
        (float_transcendental(Transcendental::sin_affine, r3h(), M_PI / 3, order) -
         float_transcendental(Transcendental::exp, -0.5, 0.0, order).scaled(r3h()));
    FloatSeries inner = phi(j, order) + monomial_over_factorial(j - 1, order);
    return (weight * inner).integrated();
}

inline FloatSeries exp_exp(int order) {  // e^{e^x}
    return exp_of(float_transcendental(Transcendental::exp, 1.0, 0.0, order));
}

inline FloatSeries exp_minus_exp(int order) {  // e^{-e^x}
    return exp_of(float_transcendental(Transcendental::exp, 1.0, 0.0, order).scaled(-1.0));
}

// e^{e^x - 1} - 1: Bell numbers with the empty permutation removed.
inline FloatSeries bell_nonempty(int order) {
    FloatSeries f = exp_of(float_transcendental(Transcendental::exp, 1.0, 0.0, order) -
                           FloatSeries::constant(1.0, order));
    return f - FloatSeries::constant(1.0, order);
}

// Bell-class avoiders (1-32, and equally 1-23 where defined) beginning with
// an increasing window of length k: e^{e^x} Int e^{-e^t} sum_{i>=k-1} t^i/i! dt.
inline FloatSeries bell_inc_begin(int k, int order) {
    if (k == 1) return bell_nonempty(order);
    return exp_exp(order + 1) * (exp_minus_exp(order) * exp_tail(k - 1, order)).integrated();
}

// The same classes beginning with a decreasing window of length k:
//   (e^{e^x}/(k-1)!) Int t^{k-1} e^{-e^t + t} dt.
inline FloatSeries bell_dec_begin(int k, int order) {
    if (k == 1) return bell_nonempty(order);
    FloatSeries body = exp_minus_exp(order) *
                       float_transcendental(Transcendental::exp, 1.0, 0.0, order) *
                       monomial_over_factorial(k - 1, order);
    return exp_exp(order + 1) * body.integrated();
}

// Assembles a family whose positional recurrence only holds once the two
// boundary windows overlap in at most one letter: below that the windows
// force the single monotone permutation, so the coefficient is an indicator;
// above, the coefficient comes from integrating the recurrence right side.
inline FloatSeries assemble_from_overlap(const FloatSeries& rhs, int k, int l) {
    int order = std::min(rhs.order() + 1, float_order_cap + 1);
    std::vector<double> c(order, 0.0);
    double fact = 1.0;
    for (int m = 1; m < order; ++m) {
        fact *= m;
        if (m >= std::max(k, l) && m <= k + l - 2)
            c[m] = 1.0 / fact;
        else if (m >= k + l - 1 && m - 1 < rhs.order())
            c[m] = rhs[m - 1] / m;
    }
    return FloatSeries(std::move(c));
}

// Contiguous 123 with monotone windows at both ends.
inline FloatSeries egf_123(Dir bd, Dir ed, int k, int l, int order) {
    if (bd == Dir::inc && ed == Dir::dec) return egf_123(Dir::dec, Dir::inc, l, k, order);
    if (bd == Dir::inc && ed == Dir::inc) {
        if (k >= 3 || l >= 3) return FloatSeries::zero(order);
        FloatSeries half = FloatSeries::monomial(-0.5, 0, order);
        FloatSeries tanp = float_transcendental(Transcendental::tan_affine, r3h(), M_PI / 6, order);
        FloatSeries base = float_transcendental(Transcendental::exp, 0.5, 0.0, order)
                               .scaled(r3h()) *
                           sec_six(order);
        if (k == 1 && l == 1) return base - FloatSeries::constant(1.0, order);
        if (k == 2 && l == 2) {
            FloatSeries x = FloatSeries::monomial(1.0, 1, order);
            FloatSeries coshp = float_transcendental(Transcendental::exp, 0.5, 0.0, order) +
                                float_transcendental(Transcendental::exp, -0.5, 0.0, order);
            FloatSeries sinp =
                float_transcendental(Transcendental::sin_affine, r3h(), M_PI / 3, order);
            return x + half - tanp.scaled(r3h()) +
                   sec_six(order) * (coshp.scaled(r3h()) - sinp);
        }
        return base + half - tanp.scaled(r3h());  // (1,2) and (2,1)
    }
    if (bd == Dir::dec && ed == Dir::inc) {
        if (l >= 3) return FloatSeries::zero(order);
        return l == 1 ? phi(k, order) : e123_dec_then_rise(k, order);
    }
    // both windows decreasing
    if (k == 1) return phi(l, order);
    if (l == 1) return phi(k, order);
    if (l == 2) return phi(k, order) - e123_dec_then_rise(k, order);
    FloatSeries end21 = phi(k, order) - e123_dec_then_rise(k, order);
    FloatSeries rhs = (phi(l, order) + monomial_over_factorial(l - 1, order)) * end21 +
                      egf_123(Dir::dec, Dir::dec, k - 1, l, order);
    return assemble_from_overlap(rhs, k, l);
}

// Pattern 1-32 with monotone windows.
inline FloatSeries egf_1_32(Dir bd, Dir ed, int k, int l, int order) {
    FloatSeries base = bd == Dir::inc ? bell_inc_begin(k, order) : bell_dec_begin(k, order);
    if (ed == Dir::dec) {
        // The least letter is pinned to the right end; the end window only
        // shifts the index. Decreasing permutations with deeply overlapping
        // windows are added back.
        FloatSeries shifted = base;
        for (int i = 1; i < l; ++i) shifted = shifted.integrated();
        if (bd == Dir::dec)
            for (int j = std::max(k, l); j <= k + l - 2; ++j)
                shifted = shifted + monomial_over_factorial(j, shifted.order());
        return shifted;
    }
    if (l == 1) return base;
    FloatSeries rhs = exp_tail(l - 1, order) * base;
    if (bd == Dir::inc)
        rhs = rhs + exp_tail(std::max(l, k) - 1, order);
    else
        rhs = rhs + exp_tail(l - 1, order) * monomial_over_factorial(k - 1, order);
    return rhs.integrated();
}

// Pattern 1-23 with monotone windows (closed forms only; the remaining
// direction pairs live in the recurrence engine).
inline FloatSeries egf_1_23(Dir bd, Dir ed, int k, int l, int order) {
    if (bd == Dir::inc && k >= 3) return FloatSeries::zero(order);
    if (ed == Dir::inc && l >= 3) return FloatSeries::zero(order);
    FloatSeries x = FloatSeries::monomial(1.0, 1, order);
    if (ed == Dir::inc) {
        if (l == 1) {
            if (bd == Dir::inc) return bell_inc_begin(k, order);
            return bell_dec_begin(k, order);
        }
        // l == 2: the least letter sits next to the right end.
        FloatSeries base = bd == Dir::inc ? bell_inc_begin(k, order) : bell_dec_begin(k, order);
        FloatSeries r = (x * base).integrated();
        if (bd == Dir::inc) return r + monomial_over_factorial(2, r.order());
        double kf = 1.0;  // k * x^{k+1}/(k+1)!
        for (int i = 2; i <= k + 1; ++i) kf *= i;
        return r + FloatSeries::monomial(k / kf, k + 1, r.order());
    }
    // ed == dec
    if (l == 1) return bd == Dir::inc ? bell_inc_begin(k, order) : bell_dec_begin(k, order);
    if (bd == Dir::inc || k == 1)
        throw std::invalid_argument("no registered formula for this window pair");
    FloatSeries rhs = egf_1_23(Dir::dec, Dir::dec, k, l - 1, order) +
                      exp_tail(l, order) * (bell_dec_begin(k, order) +
                                            monomial_over_factorial(k - 1, order));
    return assemble_from_overlap(rhs, k, l);
}

// Simultaneous avoidance of 12-3 and 21-3, windows increasing on both ends.
inline FloatSeries egf_double_12_3_21_3(int k, int l, int order) {
    if (k >= 3 || l >= 3) return FloatSeries::zero(order);
    FloatSeries inv = exp_of(FloatSeries::monomial(1.0, 1, order) +
                             FloatSeries::monomial(0.5, 2, order));
    FloatSeries one = FloatSeries::constant(1.0, order);
    FloatSeries x = FloatSeries::monomial(1.0, 1, order);
    FloatSeries inv_neg = exp_of(FloatSeries::monomial(-1.0, 1, order) +
                                 FloatSeries::monomial(-0.5, 2, order));
    if (k == 1 && l == 1) return inv - one;
    if (k == 1 && l == 2) return inv * (one - inv_neg.integrated()) - one;
    if (k == 2 && l == 1) return (x * inv).integrated();
    // Both windows of length 2: the maximum must sit in second position and
    // the letter before it is free, so the (1,2) family enters under t dt.
    FloatSeries inner = inv * (one - inv_neg.integrated()) - one;  // the (1,2) family
    return (x * (inner + one)).integrated();
}

}  // namespace detail

// Closed-form exponential generating function for a registered family.
// Family ids use the same grammar as the ordinary ones; the double-avoidance
// family is "12-3&21-3:inc,inc".
inline FloatSeries egf_formula(const std::string& family_id, int k, int l, int order) {
    if (order > float_order_cap)
        throw std::invalid_argument("float order capped at " +
                                    std::to_string(float_order_cap));
    if (k < 1 || l < 1) throw std::invalid_argument("window lengths must be >= 1");
    auto f = parse_family(family_id);
    if (!f.two_sided)
        throw std::invalid_argument("exponential families are registered two-sided; "
                                    "use window length 1 for a free end");
    const std::string& p = f.pattern;
    if (p == "123") return detail::egf_123(f.bd, f.ed, k, l, order);
    if (p == "1-32") return detail::egf_1_32(f.bd, f.ed, k, l, order);
    if (p == "21-3") return detail::egf_1_32(f.ed, f.bd, l, k, order);
    if (p == "1-23") return detail::egf_1_23(f.bd, f.ed, k, l, order);
    if (p == "12-3") {
        // The vacuous-window case runs through the exact rational sum whose
        // coefficients are the Bell numbers, converted to float flavour.
        if (f.bd == Dir::inc && f.ed == Dir::inc && k == 1 && l == 1)
            return ogf_to_egf(bell_rational_sum(order)) - FloatSeries::constant(1.0, order);
        return detail::egf_1_23(f.ed, f.bd, l, k, order);
    }
    if (p == "12-3&21-3") {
        if (f.bd != Dir::inc || f.ed != Dir::inc)
            throw std::invalid_argument("no registered formula for " + family_id);
        return detail::egf_double_12_3_21_3(k, l, order);
    }
    throw std::invalid_argument("no registered formula for " + family_id);
}

inline bool has_egf(const std::string& family_id, int k, int l) {
    try {
        egf_formula(family_id, k, l, 4);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// --- rendering -----------------------------------------------------------------

// One "n: numerator/denominator" line per known coefficient.
inline std::string render_lines(const RationalSeries& s) {
    std::string out;
    for (int n = 0; n < s.order(); ++n) {
        out += std::to_string(n) + ": " +
               boost::multiprecision::numerator(s[n]).str() + "/" +
               boost::multiprecision::denominator(s[n]).str() + "\n";
    }
    return out;
}

// One "n: decimal" line per known coefficient.
inline std::string render_lines(const FloatSeries& s) {
    std::string out;
    char buf[64];
    for (int n = 0; n < s.order(); ++n) {
        std::snprintf(buf, sizeof buf, "%d: %.17g\n", n, s[n]);
        out += buf;
    }
    return out;
}

}  // namespace gpav::series
