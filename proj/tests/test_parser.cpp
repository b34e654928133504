#include <catch2/catch_amalgamated.hpp>

#include <oddp/parser.hpp>
#include <oddp/random_poly.hpp>

#include <random>

using namespace oddp;

namespace {

SuperPolynomial T(int i) { return SuperPolynomial::variable(var_theta(i)); }
SuperPolynomial q(int i) { return SuperPolynomial::variable(var_q(i)); }

}  // namespace

TEST_CASE("odd factor order is sign-normalized on parse") {
    CHECK(parse_expression("T2*T1") == -(T(1) * T(2)));
    CHECK(parse_expression("T1*T2") == T(1) * T(2));
    CHECK(parse_expression("T1*T1").is_zero());
}

TEST_CASE("scalars, radicals, and even squares") {
    const auto p = parse_expression("1/2 r2 * T1 + q1*q1");
    SuperPolynomial expect =
        T(1) * Scalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)) + q(1) * q(1);
    CHECK(p == expect);
    CHECK(parse_expression("2") == SuperPolynomial::constant(Scalar(2)));
    CHECK(parse_expression("-3/4 r6") ==
          SuperPolynomial::constant(Scalar(Rational(0), Rational(0), Rational(0), Rational(-3, 4))));
    CHECK(parse_expression("0/1").is_zero());
}

TEST_CASE("parenthesized subexpressions") {
    CHECK(parse_expression("(T1 + T2) * T2") == T(1) * T(2));
    CHECK(parse_expression("(1/2 + 1/2) * T1") == T(1));
    CHECK(parse_expression("(1/1 + 1/1 r2) * (1/1 - 1/1 r2)") ==
          SuperPolynomial::constant(Scalar(-1)));
}

TEST_CASE("subtraction binds terms") {
    CHECK(parse_expression("T1*T2 - T1*T2").is_zero());
    CHECK(parse_expression("q1 - q2 + q2") == q(1));
}

TEST_CASE("variable families") {
    CHECK(parse_expression("th3") == SuperPolynomial::variable(var_small_theta(3)));
    CHECK(parse_expression("p2") == SuperPolynomial::variable(var_p(2)));
    CHECK(parse_expression("X7") == SuperPolynomial::variable(var_x(7)));
    // T and th are distinct families that anticommute
    CHECK(parse_expression("th1 * T1") == -(parse_expression("T1 * th1")));
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("T1 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("(T1"), ParseError);
    CHECK_THROWS_AS(parse_expression("y1"), ParseError);
    CHECK_THROWS_AS(parse_expression("T0"), ParseError);
    CHECK_THROWS_AS(parse_expression("T"), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0"), ParseError);
    CHECK_THROWS_AS(parse_expression("T1 T2"), ParseError);
    try {
        parse_expression("T1 * y2");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
}

TEST_CASE("dimension bound is enforced when given") {
    CHECK_THROWS_AS(parse_expression("T4", 3), ParseError);
    CHECK_NOTHROW(parse_expression("T4", 4));
    CHECK_NOTHROW(parse_expression("q40"));  // even variables have no capacity cap
    CHECK_THROWS_AS(parse_expression("T33"), ParseError);
}

TEST_CASE("printing and reparsing is the identity") {
    CHECK(SuperPolynomial::zero().to_string() == "0/1");
    std::mt19937_64 rng(2025);
    const RandomPolySource sources[] = {
        RandomPolySource(5, {}, {Family::Theta}),
        RandomPolySource(4, {Family::Q}, {Family::SmallTheta}),
        RandomPolySource(3, {Family::Q, Family::P}, {}),
        RandomPolySource(6, {Family::X}, {}),
        RandomPolySource(4, {Family::Q, Family::P, Family::X},
                         {Family::Theta, Family::SmallTheta}),
    };
    for (const auto& source : sources) {
        for (int i = 0; i < 200; ++i) {
            SuperPolynomial p = source.sample(rng);
            // sprinkle radical coefficients over some terms
            if (i % 3 == 0)
                p = p * Scalar(Rational(1, 3), Rational(-2, 5), Rational(0), Rational(7, 2));
            const std::string text = p.to_string();
            CAPTURE(text);
            CHECK(parse_expression(text) == p);
        }
    }
}
