#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace splitfactor {

// Unbounded non-negative integer. The backend is signed so intermediate
// checks can subtract safely; operations reject inputs that would produce
// a negative value instead of wrapping.
using Natural = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline Natural pow2(unsigned exponent) { return Natural(1) << exponent; }

// Unique k with 2^k <= n < 2^(k+1). Throws std::domain_error for n = 0.
inline unsigned floor_log2(const Natural& n) {
    if (n <= 0) {
        throw std::domain_error("floor_log2: log of zero");
    }
    return boost::multiprecision::msb(n);
}

// Count of binary digits: floor_log2(n) + 1 for n >= 1, zero for n = 0.
inline unsigned bit_length(const Natural& n) { return n == 0 ? 0u : floor_log2(n) + 1u; }

inline Natural isqrt(const Natural& n) { return boost::multiprecision::sqrt(n); }

inline Natural isqrt_ceil(const Natural& n) {
    Natural root = boost::multiprecision::sqrt(n);
    if (root * root < n) {
        ++root;
    }
    return root;
}

// Strict base-10 parse: digits only, no sign, no whitespace.
inline Natural parse_natural(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("not a decimal natural: empty string");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not a decimal natural: '" + text + "'");
        }
    }
    return Natural(text);
}

}  // namespace splitfactor
