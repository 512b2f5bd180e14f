#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "latred/digits.hpp"
#include "latred/params.hpp"

using namespace latred;

TEST_CASE("balanced_decode examples") {
    CHECK(balanced_decode(Int(0), Int(5), 4) == std::vector<Int>{Int(0), Int(0), Int(0), Int(0)});
    // 2 - 5 + 25 = 22
    CHECK(balanced_decode(Int(22), Int(5), 3) == std::vector<Int>{Int(2), Int(-1), Int(1)});
    CHECK(balanced_decode(Int(-3), Int(7), 1) == std::vector<Int>{Int(-3)});
}

TEST_CASE("balanced_decode rejects out-of-range values") {
    // 5^2 does not fit in two balanced base-5 digits
    CHECK_THROWS_AS(balanced_decode(Int(25), Int(5), 2), DecodeError);
    CHECK_THROWS_AS(balanced_decode(Int(22), Int(4), 3), ContractViolation);  // even p
    CHECK_THROWS_AS(balanced_decode(Int(1), Int(1), 3), ContractViolation);
}

TEST_CASE("encode/decode round trip on random digit vectors") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        Int p = 2 * Int(static_cast<unsigned long>(rng() % 500000 + 2)) + 1;  // odd, in [5, 10^6]
        std::size_t len = 1 + rng() % 50;
        Int half = (p - 1) / 2;
        unsigned long range = mpz_get_ui(Int(2 * half + 1).get_mpz_t());
        std::vector<Int> digits(len);
        for (auto& d : digits) d = Int(static_cast<unsigned long>(rng() % range)) - half;
        CHECK(balanced_decode(balanced_encode(digits, p), p, len) == digits);
    }
}

TEST_CASE("gen_exponents examples") {
    CHECK(gen_exponents(3) == std::vector<unsigned long>{81, 100, 121});
    CHECK(gen_exponents(1) == std::vector<unsigned long>{1});
    CHECK(gen_exponents(2) == std::vector<unsigned long>{16, 25});
}

TEST_CASE("gen_exponents pairwise sums distinct, gaps >= 2") {
    for (std::size_t count = 1; count <= 50; ++count) {
        auto a = gen_exponents(count);
        REQUIRE(a.size() == count);
        unsigned long limit = (count * count + count - 1) * (count * count + count - 1);
        CHECK(a.back() == limit);
        std::set<unsigned long> sums;
        for (std::size_t i = 0; i < count; ++i) {
            if (i + 1 < count) CHECK(a[i + 1] >= a[i] + 2);
            for (std::size_t j = i; j < count; ++j) CHECK(sums.insert(a[i] + a[j]).second);
        }
    }
}
