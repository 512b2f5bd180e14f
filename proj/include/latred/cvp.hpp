#pragma once

#include <cstddef>
#include <utility>

#include "reduction.hpp"

namespace latred {

struct CvpParams {
    ReductionParams base;
    Vec target;
    Int t_norm_bound;  // ceil(||t||)
};

// CVP-safe analogues of the SVP bounds. dist(t, L) <= ||t|| since 0 is a
// lattice point, so ||Bx - t|| and its first coordinate stay under
// n(M+1)(T+1) with T = ceil(||t||); the coefficient bound follows from
// Cramer's rule applied to Bx = t + e with ||e|| <= ||t||. Deliberately
// loose: only validity matters, and the brute-force tests confirm it.
inline CvpParams compute_cvp_params(const Mat& B, const Vec& t) {
    if (det_bareiss(B) == 0) throw ContractViolation("compute_cvp_params: singular basis");
    std::size_t n = B.dim();
    if (t.size() != n) throw ContractViolation("compute_cvp_params: dimension mismatch");

    Int tn = norm_sq(t);
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), tn.get_mpz_t());
    Int t_bound = (rem == 0) ? root : root + 1;

    Int m = max_abs_entry(B);
    Int nn(static_cast<unsigned long>(n));
    Int m2 = nn * (m + 1) * (t_bound + 1);
    Int m1 = 2 * pow_int(nn, n) * pow_int(m + 1, n) * (2 * t_bound + 1);

    CvpParams prm;
    prm.base = detail::params_from_bounds(n, std::move(m), std::move(m1), std::move(m2));
    prm.target = t;
    prm.t_norm_bound = std::move(t_bound);
    return prm;
}

struct CvpReductionResult {
    Vec x;        // coefficients of a closest lattice point (zero is valid)
    Vec w;        // w = Bx
    Int dist_sq;  // ||w - t||^2, the exact squared distance
    CvpParams params;
    long oracle_calls;
};

namespace detail {

// A CVP profile has no global sign freedom; pick the candidate whose
// residual reproduces the decoded length and c_t(x) cross terms.
inline bool cvp_candidate_consistent(const Mat& B, const Vec& t, const Vec& x,
                                     const DecodedProfile& prof) {
    Vec d = mat_vec(B, x);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= t[i];
    if (norm_sq(d) != prof.bx_norm_sq) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (2 * d[0] * x[i] != prof.cross_c[i]) return false;
    return true;
}

}  // namespace detail

// One-call reduction from search CVP to optimization CVP: query the oracle
// with (B_eps, eps_{n+1} t) once and decode, mirroring the SVP pipeline.
inline CvpReductionResult search_cvp_via_opt(const Mat& B, const Vec& t, CvpOracle& oracle) {
    CvpParams prm = compute_cvp_params(B, t);
    Mat b_eps = construct_b_epsilon(B, prm.base);
    if (!check_det_bound(b_eps, prm.base))
        throw DecodeError("search_cvp_via_opt: determinant bound violated");

    std::size_t n = B.dim();
    Vec scaled_t(n);
    for (std::size_t i = 0; i < n; ++i) scaled_t[i] = prm.base.eps[n] * t[i];

    long before = oracle.calls_used();
    OracleAnswer ans = oracle.query(b_eps, scaled_t);

    DecodedProfile prof = decode_profile(ans.min_sq, prm.base, /*require_nonzero=*/false);
    Vec x = recover_signs(prof, /*allow_zero=*/true);
    if (!detail::cvp_candidate_consistent(B, t, x, prof)) {
        for (Int& c : x) c = -c;
        if (!detail::cvp_candidate_consistent(B, t, x, prof))
            throw DecodeError("search_cvp_via_opt: no sign assignment matches the profile");
    }

    Vec w = mat_vec(B, x);
    return {std::move(x), std::move(w), std::move(prof.bx_norm_sq), std::move(prm),
            ans.calls_used - before};
}

}  // namespace latred
