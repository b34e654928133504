#include <catch2/catch_amalgamated.hpp>

#include <oddp/brackets.hpp>
#include <oddp/catalog.hpp>

using namespace oddp;

namespace {

SuperPolynomial T(int i) { return SuperPolynomial::variable(var_theta(i)); }
SuperPolynomial X(int i) { return SuperPolynomial::variable(var_x(i)); }
SuperPolynomial q(int i) { return SuperPolynomial::variable(var_q(i)); }
SuperPolynomial th(int i) { return SuperPolynomial::variable(var_small_theta(i)); }

}  // namespace

TEST_CASE("linear odd bracket reproduces the generator relation") {
    for (const char* name : {"so3", "sl2", "sl3"}) {
        const auto sc = catalog(name);
        const auto kind = BracketKind::linear_odd(sc);
        for (int a = 1; a <= sc.dim(); ++a)
            for (int b = 1; b <= sc.dim(); ++b) {
                SuperPolynomial expect;
                for (int g = 1; g <= sc.dim(); ++g)
                    expect += T(g) * sc.at(a, b, g);
                CHECK(bracket(kind, T(a), T(b)) == expect);
            }
    }
}

TEST_CASE("linear even bracket on generators") {
    const auto kind = BracketKind::linear_even(catalog("so3"));
    CHECK(bracket(kind, X(1), X(2)) == X(3));
    CHECK(bracket(kind, X(2), X(1)) == -X(3));
    CHECK(bracket(kind, X(1), X(1)).is_zero());
}

TEST_CASE("linear odd bracket of a quadratic with a generator collapses") {
    // {T1 T2, T3}: both surviving terms are squares of a generator.
    const auto kind = BracketKind::linear_odd(catalog("so3"));
    CHECK(bracket(kind, T(1) * T(2), T(3)).is_zero());
}

TEST_CASE("canonical odd pairing") {
    const auto kind = BracketKind::canonical_odd(3);
    CHECK(bracket(kind, q(1), th(1)) == SuperPolynomial::constant(Scalar(1)));
    CHECK(bracket(kind, q(1), th(2)).is_zero());
    // graded symmetry with g(A)=1, g(B)=0 flips exactly one sign
    CHECK(bracket(kind, th(1), q(1)) == SuperPolynomial::constant(Scalar(-1)));
    CHECK(bracket(kind, q(2) * th(3), th(2)) == th(3));
}

TEST_CASE("canonical even pairing") {
    const auto kind = BracketKind::canonical_even(2);
    const auto p = SuperPolynomial::variable(var_p(1));
    CHECK(bracket(kind, q(1), p) == SuperPolynomial::constant(Scalar(1)));
    CHECK(bracket(kind, p, q(1)) == SuperPolynomial::constant(Scalar(-1)));
    CHECK(bracket(kind, q(1), q(2)).is_zero());
}

TEST_CASE("operand family and dimension validation") {
    const auto odd = BracketKind::linear_odd(catalog("so3"));
    CHECK_THROWS_AS(bracket(odd, X(1), T(2)), std::invalid_argument);
    CHECK_THROWS_AS(bracket(odd, T(1), T(4)), std::invalid_argument);
    const auto even = BracketKind::linear_even(catalog("so3"));
    CHECK_THROWS_AS(bracket(even, T(1), X(2)), std::invalid_argument);
    CHECK_THROWS_AS(bracket(even, X(1) * X(4), X(2)), std::invalid_argument);
}

TEST_CASE("odd bracket of an odd element with itself vanishes") {
    const auto kind = BracketKind::linear_odd(catalog("so3"));
    auto rng = sample_stream(11, 0);
    const RandomPolySource source(3, {}, {Family::Theta});
    for (int i = 0; i < 50; ++i) {
        const auto a = source.homogeneous(rng, 1);
        CHECK(bracket(kind, a, a).is_zero());
    }
}

TEST_CASE("axiom suite passes for the linear brackets") {
    for (const char* name : {"so3", "sl2"}) {
        const auto sc = catalog(name);
        const auto odd_report = check_axioms(BracketKind::linear_odd(sc), 60, 0);
        CHECK(odd_report.all_passed());
        const auto even_report = check_axioms(BracketKind::linear_even(sc), 60, 0);
        CHECK(even_report.all_passed());
    }
}

TEST_CASE("axiom suite passes for the canonical brackets") {
    CHECK(check_axioms(BracketKind::canonical_odd(3), 60, 1).all_passed());
    CHECK(check_axioms(BracketKind::canonical_even(3), 60, 1).all_passed());
}

TEST_CASE("axiom suite detects a corrupted table") {
    // so3 plus the antisymmetric pair c_{13}^1 = 1 breaks Jacobi.
    auto sc = catalog("so3");
    sc.set(1, 3, 1, Scalar(1));
    sc.set(3, 1, 1, Scalar(-1));
    REQUIRE_FALSE(validate(sc).ok());
    const auto report = check_axioms(BracketKind::linear_odd(sc), 200, 0);
    bool jacobi_failed = false;
    for (const auto& check : report.checks)
        if (check.axiom == "jacobi" && !check.failures.empty())
            jacobi_failed = true;
    CHECK(jacobi_failed);
}

TEST_CASE("axiom report serializes failures verbatim") {
    auto sc = catalog("so3");
    sc.set(1, 3, 1, Scalar(1));
    sc.set(3, 1, 1, Scalar(-1));
    const auto report = check_axioms(BracketKind::linear_odd(sc), 200, 0);
    for (const auto& check : report.checks) {
        for (const auto& f : check.failures) {
            CHECK(!f.inputs.empty());
            CHECK(!f.lhs.empty());
        }
    }
}

TEST_CASE("bilinear realization of so3, odd kind") {
    const auto sc = catalog("so3");
    const auto theta = bilinear_realization(RealizationKind::Odd, sc);
    REQUIRE(theta.size() == 3);
    // T1 = q^2 th_3 - q^3 th_2 read off the epsilon table.
    CHECK(theta[0] == q(2) * th(3) - q(3) * th(2));
}

TEST_CASE("canonical odd bracket reduces to the linear odd bracket") {
    for (const char* name : {"so3", "sl2"}) {
        const auto sc = catalog(name);
        const auto composites = bilinear_realization(RealizationKind::Odd, sc);
        const auto kind = BracketKind::canonical_odd(sc.dim());
        for (int a = 1; a <= sc.dim(); ++a)
            for (int b = 1; b <= sc.dim(); ++b) {
                const auto lhs = bracket(kind, composites[a - 1], composites[b - 1]);
                SuperPolynomial rhs;
                for (int g = 1; g <= sc.dim(); ++g)
                    rhs += composites[g - 1] * sc.at(a, b, g);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("canonical even bracket reduces to the linear even bracket") {
    for (const char* name : {"so3", "sl2"}) {
        const auto sc = catalog(name);
        const auto composites = bilinear_realization(RealizationKind::Even, sc);
        const auto kind = BracketKind::canonical_even(sc.dim());
        for (int a = 1; a <= sc.dim(); ++a)
            for (int b = 1; b <= sc.dim(); ++b) {
                const auto lhs = bracket(kind, composites[a - 1], composites[b - 1]);
                SuperPolynomial rhs;
                for (int g = 1; g <= sc.dim(); ++g)
                    rhs += composites[g - 1] * sc.at(a, b, g);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("abelian algebra gives vanishing composites and brackets") {
    const auto sc = catalog("zero(4)");
    for (const auto kind : {RealizationKind::Even, RealizationKind::Odd}) {
        const auto composites = bilinear_realization(kind, sc);
        for (const auto& p : composites)
            CHECK(p.is_zero());
    }
}

TEST_CASE("even casimir of so3") {
    const auto sc = catalog("so3");
    const auto km = killing(sc);
    const auto c = even_casimir(sc, km);
    const Scalar half(Rational(-1, 2));
    CHECK(c == X(1) * X(1) * half + X(2) * X(2) * half + X(3) * X(3) * half);
}

TEST_CASE("even casimir of sl2") {
    const auto sc = catalog("sl2");
    const auto c = even_casimir(sc, killing(sc));
    // (e, f, h) order: C = 1/2 X_e X_f + 1/8 X_h^2 in canonical form.
    CHECK(c == X(1) * X(2) * Scalar(Rational(1, 2)) + X(3) * X(3) * Scalar(Rational(1, 8)));
}

TEST_CASE("casimir annihilates the linear even bracket") {
    for (const char* name : {"so3", "sl2", "sl3"}) {
        const auto sc = catalog(name);
        const auto c = even_casimir(sc, killing(sc));
        const auto kind = BracketKind::linear_even(sc);
        for (int a = 1; a <= sc.dim(); ++a)
            CHECK(bracket(kind, X(a), c).is_zero());
    }
}

TEST_CASE("casimir requires an invertible metric") {
    const auto sc = catalog("heisenberg");
    CHECK_THROWS_AS(even_casimir(sc, killing(sc)), std::domain_error);
}
