#include "doctest.h"

#include "oddzeta/errors.hpp"
#include "oddzeta/rational.hpp"

using namespace oddzeta;

TEST_CASE("integer arithmetic and helpers") {
    CHECK(BigInt(3) + BigInt(4) == BigInt(7));
    CHECK(BigInt(3) - BigInt(4) == BigInt(-1));
    CHECK(BigInt(-3) * BigInt(4) == BigInt(-12));
    CHECK(-BigInt(5) == BigInt(-5));
    CHECK(BigInt::pow(2, 10) == BigInt(1024));
    CHECK(BigInt::factorial(0) == BigInt(1));
    CHECK(BigInt::factorial(6) == BigInt(720));
    CHECK(BigInt::binomial(10, 3) == BigInt(120));
    CHECK(BigInt::binomial(10, 0) == BigInt(1));
    CHECK(BigInt(7).is_odd());
    CHECK_FALSE(BigInt(8).is_odd());
    CHECK(BigInt("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK_FALSE(BigInt("123456789012345678901234567890").fits_long());
    CHECK(BigInt(42).fits_long());
    CHECK(BigInt(-42).to_long() == -42);
}

TEST_CASE("factorial growth stays exact") {
    // 20! is the last factorial inside 64 bits; cross it and come back.
    BigInt f = BigInt::factorial(25);
    CHECK(f == BigInt::factorial(24) * BigInt(25));
    CHECK(f.to_string() == "15511210043330985984000000");
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    BigRational a(6, 4);
    CHECK(a.numerator() == BigInt(3));
    CHECK(a.denominator() == BigInt(2));
    BigRational b(3, -6);
    CHECK(b.numerator() == BigInt(-1));
    CHECK(b.denominator() == BigInt(2));
    CHECK(BigRational(0, 5) == BigRational(0));
    CHECK(BigRational(0, 5).is_zero());
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(1, 2).to_string() == "1/2");
    CHECK(BigRational(-3).to_string() == "-3");
}

TEST_CASE("rational arithmetic is exact") {
    BigRational half(1, 2), third(1, 3);
    CHECK(half + third == BigRational(5, 6));
    CHECK(half - third == BigRational(1, 6));
    CHECK(half * third == BigRational(1, 6));
    CHECK(half / third == BigRational(3, 2));
    CHECK(-half == BigRational(-1, 2));
    CHECK(BigRational(-2, 3).abs() == BigRational(2, 3));
    CHECK(BigRational::pow(BigRational(2, 3), 3) == BigRational(8, 27));
    CHECK(BigRational::pow(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK(BigRational::pow(BigRational(5), 0) == BigRational(1));
}

TEST_CASE("rational comparisons") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) < BigRational(-1, 3));
    CHECK(BigRational(2, 4) <= BigRational(1, 2));
    CHECK(BigRational(7, 1) != BigRational(7, 2));
    CHECK(BigRational(3, 7).sign() == 1);
    CHECK(BigRational(-3, 7).sign() == -1);
    CHECK(BigRational(0).sign() == 0);
}

TEST_CASE("division and construction guard the zero denominator") {
    // Malformed construction is a configuration problem; dividing by a
    // runtime zero is a domain one.
    CHECK_THROWS_AS(BigRational(1, 0), ConfigError);
    CHECK_THROWS_AS(BigRational::from_strings("1", "0"), ConfigError);
    CHECK_THROWS_AS(BigRational(1, 2) / BigRational(0), DomainError);
    CHECK_THROWS_AS(BigRational::pow(BigRational(0), -1), DomainError);
}

TEST_CASE("string round trips") {
    BigRational v = BigRational::from_strings("-123456789123456789", "987654321");
    CHECK(v == BigRational::from_strings("-123456789123456789", "987654321"));
    CHECK(BigRational::from_strings("10", "4") == BigRational(5, 2));
    // 1 + 1/3 + 1/5 + 1/7 + 1/9 over the common denominator 315.
    BigRational sum(0);
    for (long k = 1; k <= 9; k += 2) sum = sum + BigRational(1, k);
    CHECK(sum == BigRational(563, 315));
}
