#pragma once

#include <set>
#include <vector>

#include "params.hpp"

namespace latred {

inline constexpr unsigned long kBruteForceCap = 100000000UL;  // (2*box+1)^n <= cap

namespace detail {

inline void check_box(std::size_t n, const Int& box) {
    if (box < 1) throw ContractViolation("brute force: box must be >= 1");
    Int pts = pow_int(2 * box + 1, n);
    if (pts > Int(kBruteForceCap)) throw BoxLimitError("brute force: box too large");
}

// Calls fn(x) for every x in [-box, box]^n, odometer order.
template <typename Fn>
void for_each_in_box(std::size_t n, const Int& box, Fn&& fn) {
    Vec x(n, -box);
    for (;;) {
        fn(x);
        std::size_t i = 0;
        while (i < n && x[i] == box) x[i++] = -box;
        if (i == n) break;
        ++x[i];
    }
}

}  // namespace detail

struct BruteAnswer {
    Int min_sq;
    std::set<Vec> solutions;  // all minimizing coefficient vectors
};

// Exhaustive ground truth for SVP: scans every nonzero x with |x_i| <= box.
// Exact but exponential; callers keep box at the Lemma-3 coefficient bound.
inline BruteAnswer brute_svp(const Mat& B, const Int& box) {
    std::size_t n = B.dim();
    detail::check_box(n, box);
    BruteAnswer ans;
    bool found = false;
    detail::for_each_in_box(n, box, [&](const Vec& x) {
        Int v = norm_sq(mat_vec(B, x));
        if (v == 0) return;  // x = 0, or a dependent-column artifact
        if (!found || v < ans.min_sq) {
            found = true;
            ans.min_sq = v;
            ans.solutions.clear();
            ans.solutions.insert(x);
        } else if (v == ans.min_sq) {
            ans.solutions.insert(x);
        }
    });
    if (!found) throw ContractViolation("brute_svp: no nonzero vector found (zero matrix?)");
    return ans;
}

inline BruteAnswer brute_cvp(const Mat& B, const Vec& t, const Int& box) {
    std::size_t n = B.dim();
    if (t.size() != n) throw ContractViolation("brute_cvp: dimension mismatch");
    detail::check_box(n, box);
    BruteAnswer ans;
    bool found = false;
    detail::for_each_in_box(n, box, [&](const Vec& x) {
        Vec d = mat_vec(B, x);
        for (std::size_t i = 0; i < n; ++i) d[i] -= t[i];
        Int v = norm_sq(d);
        if (!found || v < ans.min_sq) {
            found = true;
            ans.min_sq = v;
            ans.solutions.clear();
            ans.solutions.insert(x);
        } else if (v == ans.min_sq) {
            ans.solutions.insert(x);
        }
    });
    return ans;
}

namespace detail {

// Smallest provable per-instance coefficient box via Cramer's rule:
// |x_i| <= sqrt(y_sq * prod_{j != i} ||b_j||^2) / |det B| for any x with
// ||Bx||^2 <= y_sq. Much tighter than M1 on concrete instances, which is
// what keeps exhaustive verification under the point cap.
inline Int cramer_box(const Mat& B, const Int& y_sq) {
    std::size_t n = B.dim();
    Int det = abs(det_bareiss(B));
    if (det == 0) throw ContractViolation("cramer_box: singular basis");
    std::vector<Int> col_sq(n);
    for (std::size_t j = 0; j < n; ++j) col_sq[j] = norm_sq(B.col(j));
    Int box = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int prod = y_sq;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= col_sq[j];
        Int bound;
        mpz_sqrt(bound.get_mpz_t(), Int(prod / (det * det)).get_mpz_t());
        bound += 1;
        if (bound > box) box = bound;
    }
    return box;
}

}  // namespace detail

// Box guaranteed to contain every SVP minimizer of B (lambda_1^2 is at
// most the shortest column).
inline Int svp_minimizer_box(const Mat& B) {
    std::size_t n = B.dim();
    Int y_sq = norm_sq(B.col(0));
    for (std::size_t j = 1; j < n; ++j)
        if (Int c = norm_sq(B.col(j)); c < y_sq) y_sq = c;
    return detail::cramer_box(B, y_sq);
}

// Box containing every CVP minimizer: ||Bx|| <= ||t|| + dist <= 2||t||.
inline Int cvp_minimizer_box(const Mat& B, const Vec& t) {
    Int y_sq = 4 * norm_sq(t);
    if (y_sq == 0) y_sq = 1;
    return detail::cramer_box(B, y_sq);
}

// Empirical check that every SVP minimizer of B_eps is one of B.
inline bool check_inclusion(const Mat& B, const ReductionParams& prm, const Int& box) {
    if (box < prm.coeff_bound)
        throw ContractViolation("check_inclusion: box below the coefficient bound");
    BruteAnswer outer = brute_svp(B, box);
    BruteAnswer inner = brute_svp(construct_b_epsilon(B, prm), box);
    for (const Vec& x : inner.solutions)
        if (!outer.solutions.count(x)) return false;
    return true;
}

}  // namespace latred
