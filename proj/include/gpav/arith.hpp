#pragma once

// Arbitrary-precision integers/rationals plus the handful of special
// sequences (binomials, factorials, Catalan, Bell) everything else is
// built from. Catalan numbers come from the convolution recurrence
// C_{n+1} = sum C_i C_{n-i}; Bell numbers from the Bell triangle.

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpav {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

namespace detail {
inline std::mutex& special_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

// nth Catalan number, memoized.
inline BigInt catalan(int n) {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(detail::special_mutex());
    static std::vector<BigInt> cat{1};  // C_0
    while ((int)cat.size() <= n) {
        int m = (int)cat.size();  // computing C_m via convolution
        BigInt c = 0;
        for (int i = 0; i < m; ++i) c += cat[i] * cat[m - 1 - i];
        cat.push_back(c);
    }
    return cat[n];
}

// nth Bell number, memoized via the Bell triangle.
inline BigInt bell(int n) {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(detail::special_mutex());
    static std::vector<BigInt> bells{1};        // B_0
    static std::vector<BigInt> row{1};          // last triangle row
    while ((int)bells.size() <= n) {
        std::vector<BigInt> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bells.push_back(row.front());
    }
    return bells[n];
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gpav
