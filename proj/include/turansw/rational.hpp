#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace turansw {

using Rational = boost::rational<long long>;

inline long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("integer overflow");
    return static_cast<long long>(p);
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

inline long long pow2ll(int e) {
    if (e < 0 || e > 62) throw std::overflow_error("2^e out of range");
    return 1ll << e;
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace turansw
