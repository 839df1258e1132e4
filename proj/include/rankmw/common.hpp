#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rankmw {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Thrown when a brute-force enumeration would exceed the configured size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt pow_int(const BigInt& base, unsigned long long e) {
    BigInt r = 1;
    BigInt b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Exact integer division; a remainder signals a bug (or invalid input) upstream.
inline BigInt div_exact(const BigInt& a, const BigInt& b, const char* what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::domain_error(std::string("inexact division in ") + what);
    return q;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace rankmw
