#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace latred {

using Int = mpz_class;
using Rat = mpq_class;

// Bad caller input: dimension mismatch, singular basis, malformed files.
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The decoded oracle answer does not fit the reduction's digit layout.
// Signals a broken (or deliberately corrupted) oracle, never a wrong vector.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A brute-force search box would exceed the enumeration cap.
struct BoxLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int sign(const Int& a) { return sgn(a); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Nearest integer, ties toward +infinity.
inline Int round_rat(const Rat& q) {
    return floor_rat(q + Rat(1, 2));
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact integer square root; nullopt if a is not a perfect square.
inline std::optional<Int> isqrt_exact(const Int& a) {
    if (sgn(a) < 0) return std::nullopt;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

inline std::string to_decimal(const Int& a) { return a.get_str(10); }

inline Int parse_decimal(const std::string& s) {
    if (s.empty()) throw ContractViolation("empty integer string");
    Int v;
    if (v.set_str(s, 10) != 0) throw ContractViolation("bad integer string: " + s);
    return v;
}

}  // namespace latred
