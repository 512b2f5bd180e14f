#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latred/cvp.hpp"
#include "latred/verify.hpp"

using namespace latred;

namespace {

Mat random_nonsingular(std::mt19937_64& rng, std::size_t n, long bound) {
    for (;;) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        if (det_bareiss(m) != 0) return m;
    }
}

}  // namespace

TEST_CASE("cvp params are valid bounds") {
    Mat b = Mat::identity(2);
    Vec t = {Int(3), Int(4)};
    CvpParams prm = compute_cvp_params(b, t);
    CHECK(prm.t_norm_bound == 5);
    CHECK(prm.base.modulus % 2 == 1);
    CHECK(prm.base.exponents == gen_exponents(3));
    // M2 >= any achievable ||Bx - t|| and M1 >= any closest-point coefficient
    CHECK(prm.base.length_bound >= 5);
    CHECK(prm.base.coeff_bound >= 4);
}

TEST_CASE("search_cvp_via_opt worked examples") {
    EnumCvpOracle oracle;

    CvpReductionResult r1 = search_cvp_via_opt(Mat::identity(2), {Int(3), Int(4)}, oracle);
    CHECK(r1.x == Vec{Int(3), Int(4)});
    CHECK(r1.w == Vec{Int(3), Int(4)});
    CHECK(r1.dist_sq == 0);
    CHECK(r1.oracle_calls == 1);

    CvpReductionResult r2 = search_cvp_via_opt(Mat::from_rows({{Int(2)}}), {Int(1)}, oracle);
    CHECK(r2.dist_sq == 1);
    CHECK((r2.x == Vec{Int(0)} || r2.x == Vec{Int(1)}));

    CvpReductionResult r3 = search_cvp_via_opt(
        Mat::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}), {Int(0), Int(0)}, oracle);
    CHECK(r3.x == Vec{Int(0), Int(0)});
    CHECK(r3.w == Vec{Int(0), Int(0)});
    CHECK(r3.dist_sq == 0);
}

TEST_CASE("cvp pipeline soundness on random instances") {
    std::mt19937_64 rng(404);
    EnumCvpOracle oracle;
    int lattice_targets = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 2;
        Mat b = random_nonsingular(rng, n, 2);
        Vec t(n);
        if (trial % 3 == 0) {
            // target inside the lattice
            Vec x(n);
            for (auto& c : x) c = static_cast<long>(rng() % 5) - 2;
            t = mat_vec(b, x);
            ++lattice_targets;
        } else {
            for (auto& c : t) c = static_cast<long>(rng() % 9) - 4;
        }
        long before = oracle.calls_used();
        CvpReductionResult r = search_cvp_via_opt(b, t, oracle);
        CHECK(oracle.calls_used() == before + 1);

        Vec d = r.w;
        for (std::size_t i = 0; i < n; ++i) d[i] -= t[i];
        CHECK(norm_sq(d) == r.dist_sq);
        CHECK(r.dist_sq == brute_cvp(b, t, cvp_minimizer_box(b, t)).min_sq);
        if (norm_sq(t) == 0) CHECK(r.x == Vec(n, Int(0)));
    }
    CHECK(lattice_targets >= 10);
}

TEST_CASE("lattice target decodes to an exact match") {
    EnumCvpOracle oracle;
    Mat b = Mat::from_rows({{Int(2), Int(1)}, {Int(0), Int(2)}});
    Vec x0 = {Int(-1), Int(2)};
    Vec t = mat_vec(b, x0);
    CvpReductionResult r = search_cvp_via_opt(b, t, oracle);
    CHECK(r.dist_sq == 0);
    CHECK(r.w == t);
    CHECK(r.x == x0);
}

TEST_CASE("cvp requires a matching target dimension") {
    EnumCvpOracle oracle;
    CHECK_THROWS_AS(search_cvp_via_opt(Mat::identity(2), {Int(1)}, oracle), ContractViolation);
}
