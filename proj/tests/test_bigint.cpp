#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spexlab/bigint.hpp"
#include "test_util.hpp"

using spexlab::BigInt;

TEST_CASE("small arithmetic matches built-in integers") {
    testutil::Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_ll() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_ll() == a % b);
        }
    }
}

TEST_CASE("divmod identity on large operands") {
    testutil::Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        BigInt a(1), b(1);
        int la = 1 + static_cast<int>(rng.below(6));
        int lb = 1 + static_cast<int>(rng.below(4));
        for (int j = 0; j < la; ++j) a = a * BigInt(static_cast<long long>(rng.next() >> 16)) + BigInt(static_cast<long long>(rng.below(1000)));
        for (int j = 0; j < lb; ++j) b = b * BigInt(static_cast<long long>(rng.next() >> 16)) + BigInt(static_cast<long long>(rng.below(1000)));
        if (rng.below(2)) a = -a;
        if (rng.below(2)) b = -b;
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("decimal string round trip") {
    testutil::Rng rng(3);
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-7).to_string() == "-7");
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    for (int i = 0; i < 200; ++i) {
        BigInt a(1);
        for (int j = 0; j < 4; ++j) a = a * BigInt(static_cast<long long>(rng.next() >> 8));
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("pow, gcd, shifts") {
    CHECK(BigInt::pow(BigInt(7), 30).to_string() == "22539340290692258087863249");
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)) == BigInt(21));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK((BigInt(1) << 70) == BigInt::pow(BigInt(2), 70));
    CHECK(BigInt(100).div_exact(BigInt(-4)) == BigInt(-25));
    CHECK_THROWS_AS(BigInt(100).div_exact(BigInt(7)), std::logic_error);
}

TEST_CASE("comparisons and bit length") {
    CHECK(BigInt(5) > BigInt(-5));
    CHECK(BigInt(-10) < BigInt(-3));
    CHECK(BigInt(0).bit_length() == 0);
    CHECK(BigInt(1).bit_length() == 1);
    CHECK((BigInt(1) << 100).bit_length() == 101);
    CHECK(BigInt((1ll << 40)).to_double() == doctest::Approx(1099511627776.0));
}
