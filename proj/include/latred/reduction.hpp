#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "digits.hpp"
#include "oracle.hpp"
#include "params.hpp"

namespace latred {

// Coefficients read off the balanced base-p digits of the oracle's answer:
//   lambda^2 = bx_norm_sq * eps_{n+1}^2 + sum x_i^2 eps_i^2
//            + sum 2 c x_i eps_{n+1} eps_i + sum_{i<j} 2 x_i x_j eps_i eps_j
struct DecodedProfile {
    std::size_t n = 0;
    Int bx_norm_sq;           // ||Bx||^2 (SVP) or ||Bx - t||^2 (CVP)
    std::vector<Int> x_sq;    // x_i^2
    std::vector<Int> cross_c; // 2 c(x) x_i, c(x) = first coordinate of Bx (or Bx - t)
    std::vector<Int> cross_xx;  // 2 x_i x_j for i < j, see pair_index

    static std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
        // row-major over the strict upper triangle
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    const Int& xx(std::size_t i, std::size_t j) const { return cross_xx[pair_index(n, i, j)]; }
};

// Splits the oracle's squared optimum into the profile coefficients. Every
// digit position that is not a pairwise exponent sum must be zero; anything
// else means the oracle lied.
inline DecodedProfile decode_profile(const Int& lambda_sq, const ReductionParams& prm,
                                     bool require_nonzero = true) {
    std::size_t n = prm.n;
    const auto& a = prm.exponents;
    std::size_t num_digits = 2 * a[n] + 1;
    std::vector<Int> digits = balanced_decode(lambda_sq, prm.modulus, num_digits);

    // position -> (i, j) with i <= j over exponents 0..n; kRoleNone elsewhere
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> role(num_digits, {kNone, kNone});
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) role[a[i] + a[j]] = {i, j};

    DecodedProfile prof;
    prof.n = n;
    prof.x_sq.assign(n, Int(0));
    prof.cross_c.assign(n, Int(0));
    prof.cross_xx.assign(n * (n - 1) / 2, Int(0));
    prof.bx_norm_sq = 0;

    for (std::size_t pos = 0; pos < num_digits; ++pos) {
        const Int& d = digits[pos];
        auto [i, j] = role[pos];
        if (i == kNone) {
            if (d != 0)
                throw DecodeError("decode_profile: nonzero digit at position " +
                                  std::to_string(pos) + ", not an exponent pair sum");
            continue;
        }
        if (i == n && j == n)
            prof.bx_norm_sq = d;
        else if (j == n)
            prof.cross_c[i] = d;
        else if (i == j)
            prof.x_sq[i] = d;
        else
            prof.cross_xx[DecodedProfile::pair_index(n, i, j)] = d;
    }

    for (const Int& s : prof.x_sq)
        if (s < 0) throw DecodeError("decode_profile: negative x_i^2 digit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Int& c = prof.xx(i, j);
            if (c * c != 4 * prof.x_sq[i] * prof.x_sq[j])
                throw DecodeError("decode_profile: cross term inconsistent with squares");
        }
    if (prof.bx_norm_sq < 0) throw DecodeError("decode_profile: negative squared length");
    if (require_nonzero && prof.bx_norm_sq == 0)
        throw DecodeError("decode_profile: zero squared length for SVP");
    return prof;
}

// Fix the first nonzero coordinate positive, then read the remaining signs
// off the 2 x_k x_j cross terms. Checks every pair, not just pairs with k.
inline Vec recover_signs(const DecodedProfile& prof, bool allow_zero = false) {
    std::size_t n = prof.n;
    Vec x(n, Int(0));
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (prof.x_sq[i] == 0) continue;
        auto r = isqrt_exact(prof.x_sq[i]);
        if (!r) throw DecodeError("recover_signs: x_i^2 is not a perfect square");
        x[i] = *r;
        if (k == n) k = i;
    }
    if (k == n) {
        if (allow_zero) return x;
        throw DecodeError("recover_signs: all coefficients zero");
    }
    for (std::size_t j = k + 1; j < n; ++j) {
        if (x[j] == 0) continue;
        int s = sign(prof.xx(k, j));
        if (s == 0) throw DecodeError("recover_signs: zero cross term for nonzero pair");
        if (s < 0) x[j] = -x[j];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (2 * x[i] * x[j] != prof.xx(i, j))
                throw DecodeError("recover_signs: pairwise sign inconsistency");
    return x;
}

struct SvpReductionResult {
    Vec x;            // coefficients of a shortest vector of L(B)
    Vec v;            // v = Bx, ||v||^2 = lambda_1(L(B))^2
    Int lambda_sq;    // decoded ||Bx||^2
    ReductionParams params;
    long oracle_calls;  // queries spent by THIS run; always 1 on success
};

// The one-call reduction: build B_eps, query the optimization oracle once,
// decode the digit profile, recover signs, return Bx.
inline SvpReductionResult search_svp_via_opt(const Mat& B, SvpOracle& oracle) {
    ReductionParams prm = compute_params(B);
    Mat b_eps = construct_b_epsilon(B, prm);
    if (!check_det_bound(b_eps, prm))
        throw DecodeError("search_svp_via_opt: determinant bound violated");

    long before = oracle.calls_used();
    OracleAnswer ans = oracle.query(b_eps);

    DecodedProfile prof = decode_profile(ans.min_sq, prm);
    Vec x = recover_signs(prof);
    Vec v = mat_vec(B, x);
    if (norm_sq(v) != prof.bx_norm_sq)
        throw DecodeError("search_svp_via_opt: ||Bx||^2 disagrees with decoded length");
    for (std::size_t i = 0; i < prm.n; ++i)
        if (2 * v[0] * x[i] != prof.cross_c[i])
            throw DecodeError("search_svp_via_opt: c(x) cross term mismatch");

    return {std::move(x), std::move(v), std::move(prof.bx_norm_sq), std::move(prm),
            ans.calls_used - before};
}

}  // namespace latred
