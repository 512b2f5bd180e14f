#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latred/enumerate.hpp"
#include "latred/oracle.hpp"

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

void check_lll_contract(const Mat& input, const LllBasis& out) {
    std::size_t n = input.dim();
    Int ud = det_bareiss(out.transform);
    CHECK((ud == 1 || ud == -1));
    // reduced = input * transform
    for (std::size_t j = 0; j < n; ++j) {
        Vec col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = out.transform.at(i, j);
        CHECK(mat_vec(input, col) == out.reduced.col(j));
    }
    Gso g = gram_schmidt(out.reduced);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Rat m = g.mu[k][j];
            CHECK(abs(m.get_num()) * 2 <= m.get_den());
        }
        Rat lhs = g.ortho_norm_sq[k];
        Rat rhs = (Rat(3, 4) - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.ortho_norm_sq[k - 1];
        CHECK(lhs >= rhs);
    }
}

}  // namespace

TEST_CASE("lll_reduce trivial cases") {
    LllBasis r1 = lll_reduce(Mat::identity(2));
    CHECK(r1.reduced == Mat::identity(2));
    CHECK(r1.transform == Mat::identity(2));

    LllBasis r2 = lll_reduce(Mat::from_rows({{Int(2)}}));
    CHECK(r2.reduced.at(0, 0) == 2);

    CHECK_THROWS_AS(lll_reduce(Mat::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}})),
                    ContractViolation);
}

TEST_CASE("lll_reduce shortens a skew basis") {
    // columns (1,0), (10,1)
    Mat b = Mat::from_rows({{Int(1), Int(10)}, {Int(0), Int(1)}});
    LllBasis r = lll_reduce(b);
    check_lll_contract(b, r);
    CHECK(norm_sq(r.reduced.col(0)) <= 1);
}

TEST_CASE("lll_reduce contract on random bases") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 4;
        Mat b = random_nonsingular(rng, n, 6);
        check_lll_contract(b, lll_reduce(b));
    }
}

TEST_CASE("svp enumeration examples") {
    CHECK(svp_opt_enum(Mat::identity(3)) == 1);
    CHECK(svp_opt_enum(Mat::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}})) == 4);
    CHECK(svp_opt_enum(Mat::from_rows({{Int(1), Int(1)}, {Int(0), Int(1)}})) == 1);

    SvpSolution s1 = svp_search_enum(Mat::identity(2));
    CHECK(s1.min_sq == 1);
    CHECK(s1.x == Vec{Int(0), Int(1)});  // lex-smallest, first nonzero positive

    SvpSolution s2 = svp_search_enum(Mat::from_rows({{Int(2)}}));
    CHECK(s2.x == Vec{Int(1)});
    CHECK(s2.min_sq == 4);
}

TEST_CASE("svp enumeration matches brute force") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + rng() % 3;
        Mat b = random_nonsingular(rng, n, 3);
        SvpSolution s = svp_search_enum(b);

        // brute force over a provably sufficient box
        Int best = -1;
        long box = 40;  // far above n^n M^n / |det| for these sizes
        Vec x(n, Int(-box));
        for (;;) {
            Int v = norm_sq(mat_vec(b, x));
            if (v != 0 && (best < 0 || v < best)) best = v;
            std::size_t i = 0;
            while (i < n && x[i] == box) x[i++] = -box;
            if (i == n) break;
            ++x[i];
        }
        CHECK(s.min_sq == best);
        CHECK(norm_sq(mat_vec(b, s.x)) == s.min_sq);
    }
}

TEST_CASE("cvp enumeration examples") {
    CHECK(cvp_opt_enum(Mat::identity(2), {Int(0), Int(0)}) == 0);
    CHECK(cvp_opt_enum(Mat::identity(2), {Int(3), Int(4)}) == 0);
    CHECK(cvp_opt_enum(Mat::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}),
                       {Int(1), Int(1)}) == 2);
}

TEST_CASE("cvp enumeration matches brute force") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 2;
        Mat b = random_nonsingular(rng, n, 3);
        Vec t(n);
        for (auto& c : t) c = static_cast<long>(rng() % 9) - 4;
        CvpSolution s = cvp_search_enum(b, t);

        Int best = -1;
        long box = 40;
        Vec x(n, Int(-box));
        for (;;) {
            Vec d = mat_vec(b, x);
            for (std::size_t i = 0; i < n; ++i) d[i] -= t[i];
            Int v = norm_sq(d);
            if (best < 0 || v < best) best = v;
            std::size_t i = 0;
            while (i < n && x[i] == box) x[i++] = -box;
            if (i == n) break;
            ++x[i];
        }
        CHECK(s.dist_sq == best);
        Vec d = mat_vec(b, s.x);
        for (std::size_t i = 0; i < n; ++i) d[i] -= t[i];
        CHECK(norm_sq(d) == s.dist_sq);
    }
}

TEST_CASE("oracle call counting") {
    EnumSvpOracle oracle;
    CHECK(oracle.calls_used() == 0);
    OracleAnswer a1 = oracle.query(Mat::identity(2));
    CHECK(a1.min_sq == 1);
    CHECK(a1.calls_used == 1);
    OracleAnswer a2 = oracle.query(Mat::identity(3));
    CHECK(a2.calls_used == 2);
    CHECK(oracle.calls_used() == 2);
}
