#pragma once

#include <atomic>

#include "enumerate.hpp"
#include "verify.hpp"

namespace latred {

struct OracleAnswer {
    Int min_sq;       // lambda_1^2 (SVP) or squared distance (CVP)
    long calls_used;  // cumulative queries answered by this oracle
};

// Optimization-SVP oracle: answers only with the optimal VALUE, never a
// vector. Every query bumps the counter, which is what the one-call
// reduction is measured against.
class SvpOracle {
  public:
    virtual ~SvpOracle() = default;

    OracleAnswer query(const Mat& basis) {
        Int v = compute(basis);
        return {std::move(v), ++calls_};
    }

    long calls_used() const { return calls_.load(); }

  protected:
    virtual Int compute(const Mat& basis) = 0;

  private:
    std::atomic<long> calls_{0};
};

// The real thing: LLL preprocessing plus exact enumeration. Sees nothing
// but the basis it is handed.
class EnumSvpOracle final : public SvpOracle {
  protected:
    Int compute(const Mat& basis) override { return svp_opt_enum(basis); }
};

// Theorem-assisted oracle: knows the original basis B, enumerates its SVP
// solution set by brute force, and minimizes ||B_eps x|| over that set.
// Valid because the minimizers of B_eps all lie in S_B; cross-validated
// against EnumSvpOracle in the tests. Refuses when the brute-force box
// would be too large.
class AssistedSvpOracle final : public SvpOracle {
  public:
    explicit AssistedSvpOracle(Mat original) : original_(std::move(original)) {}

  protected:
    Int compute(const Mat& b_eps) override {
        ReductionParams prm = compute_params(original_);
        BruteAnswer sols = brute_svp(original_, prm.coeff_bound);
        bool found = false;
        Int best;
        for (const Vec& x : sols.solutions) {
            Int v = norm_sq(mat_vec(b_eps, x));
            if (!found || v < best) {
                found = true;
                best = v;
            }
        }
        return best;
    }

  private:
    Mat original_;
};

class CvpOracle {
  public:
    virtual ~CvpOracle() = default;

    OracleAnswer query(const Mat& basis, const Vec& target) {
        Int v = compute(basis, target);
        return {std::move(v), ++calls_};
    }

    long calls_used() const { return calls_.load(); }

  protected:
    virtual Int compute(const Mat& basis, const Vec& target) = 0;

  private:
    std::atomic<long> calls_{0};
};

class EnumCvpOracle final : public CvpOracle {
  protected:
    Int compute(const Mat& basis, const Vec& target) override {
        return cvp_opt_enum(basis, target);
    }
};

}  // namespace latred
