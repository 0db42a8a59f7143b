#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace turan {

/// Exact copy counts. N(K_{a,...,a}, T(n,r)) overflows 64 bits at quite
/// moderate sizes, so every count that crosses a public interface is a
/// big integer.
using CopyCount = boost::multiprecision::cpp_int;

inline CopyCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    CopyCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

inline CopyCount factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    CopyCount result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

}  // namespace turan
