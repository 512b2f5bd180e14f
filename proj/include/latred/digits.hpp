#pragma once

#include <cstddef>
#include <vector>

#include "ints.hpp"

namespace latred {

// Balanced base-p digits: N = sum d_i p^i with |d_i| <= floor(p/2), p odd.
// Each digit is the representative of N mod p nearest to zero; the
// representation is unique, so decoding is digit-by-digit division.
inline std::vector<Int> balanced_decode(Int value, const Int& p, std::size_t num_digits) {
    if (p <= 2 || p % 2 == 0) throw ContractViolation("balanced_decode: p must be odd and > 2");
    if (num_digits == 0) throw ContractViolation("balanced_decode: need at least one digit");
    Int half = (p - 1) / 2;
    std::vector<Int> digits(num_digits);
    for (std::size_t i = 0; i < num_digits; ++i) {
        Int r = value % p;  // GMP: sign follows the dividend
        if (r > half) r -= p;
        if (r < -half) r += p;
        digits[i] = r;
        value = (value - r) / p;
    }
    if (value != 0)
        throw DecodeError("balanced_decode: value out of range for " +
                          std::to_string(num_digits) + " digits");
    return digits;
}

inline Int balanced_encode(const std::vector<Int>& digits, const Int& p) {
    Int v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
    return v;
}

}  // namespace latred
