#pragma once

#include <cstddef>
#include <vector>

#include "linalg.hpp"

namespace latred {

// a_k = (c^2 + k - 1)^2 for k = 1..count. All pairwise sums a_i + a_j
// (i <= j) are distinct, and consecutive gaps are at least 2, so every
// product eps_i * eps_j lands on its own power of p.
inline std::vector<unsigned long> gen_exponents(std::size_t count) {
    if (count == 0) throw ContractViolation("gen_exponents: count must be >= 1");
    std::vector<unsigned long> a(count);
    unsigned long c2 = static_cast<unsigned long>(count) * static_cast<unsigned long>(count);
    for (std::size_t k = 1; k <= count; ++k) {
        unsigned long base = c2 + static_cast<unsigned long>(k) - 1;
        a[k - 1] = base * base;
    }
    return a;
}

struct ReductionParams {
    std::size_t n = 0;
    Int max_entry;                    // M(B)
    Int coeff_bound;                  // M1: |x_i| <= M1 for any SVP minimizer
    Int length_bound;                 // M2: ||Bx|| and |c(x)| <= M2
    Int modulus;                      // odd p separating the encoded digits
    std::vector<unsigned long> exponents;  // a_1 < ... < a_{n+1}
    std::vector<Int> eps;             // eps_i = p^{a_i}
};

namespace detail {

inline ReductionParams params_from_bounds(std::size_t n, Int max_entry, Int coeff_bound,
                                          Int length_bound) {
    ReductionParams prm;
    prm.n = n;
    prm.max_entry = std::move(max_entry);
    prm.coeff_bound = std::move(coeff_bound);
    prm.length_bound = std::move(length_bound);

    Int c1 = prm.length_bound * prm.length_bound;
    Int c2 = 2 * prm.coeff_bound * prm.length_bound;
    Int c3 = 2 * prm.coeff_bound * prm.coeff_bound;
    Int m = c1;
    if (c2 > m) m = c2;
    if (c3 > m) m = c3;
    prm.modulus = 2 * m + 1;

    prm.exponents = gen_exponents(n + 1);
    prm.eps.reserve(n + 1);
    for (unsigned long a : prm.exponents) prm.eps.push_back(pow_int(prm.modulus, a));
    return prm;
}

}  // namespace detail

// M2 = n(M+1) bounds ||Bx|| and |c(x)|; M1 = 2(M+1)^n n^n bounds |x_i| via
// Cramer's rule and Hadamard; p = 2*max{M2^2, 2*M1*M2, 2*M1^2} + 1.
inline ReductionParams compute_params_for(std::size_t n, const Int& max_entry) {
    if (n == 0 || max_entry < 0) throw ContractViolation("compute_params_for: bad arguments");
    Int nn(static_cast<unsigned long>(n));
    Int m2 = nn * (max_entry + 1);
    Int m1 = 2 * pow_int(max_entry + 1, n) * pow_int(nn, n);
    return detail::params_from_bounds(n, max_entry, m1, m2);
}

inline ReductionParams compute_params(const Mat& B) {
    if (det_bareiss(B) == 0) throw ContractViolation("compute_params: singular basis");
    return compute_params_for(B.dim(), max_abs_entry(B));
}

// B_eps = eps_{n+1} * B, plus eps_j added to entry (1, j).
inline Mat construct_b_epsilon(const Mat& B, const ReductionParams& prm) {
    std::size_t n = B.dim();
    if (prm.n != n) throw ContractViolation("construct_b_epsilon: params/basis mismatch");
    Mat b_eps(n);
    const Int& scale = prm.eps[n];
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) b_eps.at(i, j) = scale * B.at(i, j);
        b_eps.at(0, j) += prm.eps[j];
    }
    return b_eps;
}

// Integer restatement of |det((1/eps_{n+1}) B_eps)| >= 1/2.
inline bool check_det_bound(const Mat& b_eps, const ReductionParams& prm) {
    Int d = abs(det_bareiss(b_eps));
    return 2 * d >= pow_int(prm.eps[prm.n], prm.n);
}

}  // namespace latred
