#pragma once

#include <gmpxx.h>

#include <string>

namespace moonshine {

// Arbitrary-precision integer used for all series coefficients and
// character-table arithmetic. GMP keeps every identity check exact.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s, 10); }

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

}  // namespace moonshine
