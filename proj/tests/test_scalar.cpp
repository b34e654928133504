#include <catch2/catch_amalgamated.hpp>

#include <oddp/scalar.hpp>

#include <random>

using oddp::BigInt;
using oddp::Rational;
using oddp::Scalar;

namespace {

// Deterministic small random scalars; denominators stay <= 16.
Scalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
    auto coord = [&rng]() {
        const long long num = static_cast<long long>(rng() % 33) - 16;
        const long long den = static_cast<long long>(rng() % 16) + 1;
        return Rational(BigInt(num), BigInt(den));
    };
    for (;;) {
        Scalar s(coord(), coord(), coord(), coord());
        if (!nonzero || !s.is_zero())
            return s;
    }
}

}  // namespace

TEST_CASE("rational normalization and ordering") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("radical multiplication table") {
    const Scalar r2 = Scalar::sqrt2();
    const Scalar r3 = Scalar::sqrt3();
    const Scalar r6 = Scalar::sqrt6();
    CHECK(r2 * r2 == Scalar(2));
    CHECK(r3 * r3 == Scalar(3));
    CHECK(r6 * r6 == Scalar(6));
    CHECK(r2 * r3 == r6);
    CHECK(r2 * r6 == Scalar(2) * r3);
    CHECK(r3 * r6 == Scalar(3) * r2);
    // (1 + r2)(1 - r2) = -1
    CHECK((Scalar(1) + r2) * (Scalar(1) - r2) == Scalar(-1));
}

TEST_CASE("scalar inverses") {
    CHECK(Scalar(2).inverse() == Scalar(Rational(1, 2)));
    CHECK(Scalar::sqrt2().inverse() == Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
    // (1 + r2)^-1 = -1 + r2, since (1 + r2)(-1 + r2) = 1.
    const Scalar x = Scalar(1) + Scalar::sqrt2();
    const Scalar expect = Scalar(-1) + Scalar::sqrt2();
    CHECK(x * expect == Scalar(1));
    CHECK(x.inverse() == expect);
    CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 1000; ++i) {
        const Scalar x = random_scalar(rng, /*nonzero=*/true);
        CHECK(x * x.inverse() == Scalar(1));
    }
    for (int i = 0; i < 300; ++i) {
        const Scalar a = random_scalar(rng);
        const Scalar b = random_scalar(rng);
        const Scalar c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("galois norm of a nonzero element is a nonzero rational") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Scalar x = random_scalar(rng, /*nonzero=*/true);
        const Rational n = x.norm();
        CHECK(!n.is_zero());
    }
}

TEST_CASE("scalar text round-trip") {
    CHECK(Scalar::parse("1/2 + 3/4 r2") ==
          Scalar(Rational(1, 2), Rational(3, 4), Rational(0), Rational(0)));
    CHECK(Scalar::parse("2") == Scalar(2));
    CHECK(Scalar::parse("-5/3 r6") == Scalar(Rational(0), Rational(0), Rational(0), Rational(-5, 3)));
    CHECK(Scalar::parse("0/1") == Scalar());
    CHECK(Scalar().to_string() == "0/1");
    CHECK(Scalar(Rational(1, 2), Rational(3, 4), Rational(0), Rational(0)).to_string() ==
          "1/2 + 3/4 r2");
    CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("1/2 r5"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Scalar x = random_scalar(rng);
        CHECK(Scalar::parse(x.to_string()) == x);
    }
}
