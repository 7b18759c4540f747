#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>

namespace ringline {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp--) r *= base;
    return r;
}

// Factors n as p^e with p prime; returns false if n is not a prime power > 1.
inline bool prime_power(long long n, long long& p, int& e) {
    if (n < 2) return false;
    long long m = n;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            e = 0;
            while (m % d == 0) { m /= d; ++e; }
            return m == 1;
        }
    }
    p = m;
    e = 1;
    return true;
}

inline bool is_prime(long long n) {
    long long p;
    int e;
    return prime_power(n, p, e) && e == 1;
}

// Exact conversion helpers; throw on overflow rather than truncate.
inline long long to_ll(const Int& x) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<long long>(x);
}

}  // namespace ringline
