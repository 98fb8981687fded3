#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pblab/poly.hpp"

using namespace pblab;

namespace {
const RingPtr R = plane_ring();
Poly P(const std::string& s) { return parse_poly(s, R); }
} // namespace

TEST_CASE("parsing and printing round-trip") {
    const std::vector<std::string> canon = {
        "0",
        "1",
        "-3/2",
        "X0",
        "X0^2 + 2*X0*X1 + X1^2",
        "X0^3 - X1^2*X2",
        "1/2*X0 - X1",
        "X0*X1*X2",
    };
    for (const auto& s : canon) {
        const Poly p = P(s);
        CHECK(p.str() == s);
        CHECK(parse_poly(p.str(), R) == p);
    }
}

TEST_CASE("parser accepts whitespace, explicit +, ^1, and reordering") {
    CHECK(P("  X1 + X0 ") == P("X0 + X1"));
    CHECK(P("+X0^1") == P("X0"));
    CHECK(P("X0 - X0") == Poly::zero(R));
    CHECK(P("2*X0 + 3*X0") == P("5*X0"));
    CHECK(P("4/6*X0") == P("2/3*X0"));
    CHECK(P("X2*X0") == P("X0*X2"));
    CHECK(P("-1*X0") == P("-X0"));
}

TEST_CASE("parser rejects malformed input with positions") {
    for (const std::string bad :
         {"X0 +", "X3", "X0^", "X0^-1", "2//3", "1/0", "(X0)", "X0 X1", "*X0", ""}) {
        CHECK_THROWS_AS(parse_poly(bad, R), parse_error);
    }
    try {
        parse_poly("X0 + Y9", R);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("ring axioms on fixed polynomials") {
    const Poly a = P("X0^2 - X1*X2"), b = P("3*X1 + X2"), c = P("X0 - 1/3*X2");
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly::zero(R) == a);
    CHECK(a * Poly::constant(R, 1) == a);
    CHECK(a - a == Poly::zero(R));
}

TEST_CASE("degrees and homogeneity") {
    CHECK(Poly::zero(R).degree() == kZeroDegree);
    CHECK(P("5").degree() == 0);
    CHECK(P("X0^3 - X1^2*X2").degree() == 3);
    CHECK(P("X0^3 - X1^2*X2").homogeneous_degree() == 3);
    CHECK_FALSE(P("X0^2 + X1").homogeneous_degree().has_value());
    CHECK(Poly::zero(R).homogeneous_degree() == kZeroDegree);
}

TEST_CASE("grevlex order: degree first, then reverse-lexicographic tie-break") {
    // In three variables, degree-2 monomials in descending grevlex order:
    const std::vector<std::string> expect = {"X0^2", "X0*X1", "X1^2",
                                             "X0*X2", "X1*X2", "X2^2"};
    const auto exps = exponents_of_degree(3, 2);
    REQUIRE(exps.size() == expect.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        CHECK(Poly::monomial(R, exps[i], 1).str() == expect[i]);
    CHECK(P("X0^2 + X0*X1 + X2^2").leading_exponents() == Exponents{2, 0, 0});
}

TEST_CASE("pow agrees with repeated multiplication") {
    const Poly base = P("X0 + X1 - 2*X2");
    Poly acc = Poly::constant(R, 1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(base.pow(k) == acc);
        acc = acc * base;
    }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    // sum_i X_i * dP/dX_i == deg(P) * P
    for (const std::string s : {"X0^4", "X0^2*X1 - X2^3", "X0*X1*X2 + X1^3"}) {
        const Poly p = P(s);
        Poly sum = Poly::zero(R);
        for (int i = 0; i < 3; ++i)
            sum = sum + Poly::variable(R, i) * partial_derivative(p, i);
        CHECK(sum == Poly::constant(R, p.degree()) * p);
    }
}

TEST_CASE("mixed partial derivatives commute") {
    const Poly p = P("X0^3*X1 - 2*X1^2*X2^2 + X0*X2^3");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(partial_derivative(partial_derivative(p, i), j) ==
                  partial_derivative(partial_derivative(p, j), i));
    CHECK(partial_derivative(p, "X0") == partial_derivative(p, 0));
}

TEST_CASE("evaluation") {
    const Poly p = P("X0^2 - X1*X2");
    CHECK(p.evaluate({Rational(2), Rational(1), Rational(4)}) == 0);
    CHECK(p.evaluate({Rational(1), Rational(1), Rational(2)}) == -1);
    CHECK(p.evaluate({Rational(1, 2), Rational(0), Rational(7)}) == Rational(1, 4));
}

TEST_CASE("substitution into a larger ring") {
    const RingPtr big = p4_ring();
    const Poly f = P("X0^2 - X1*X2");
    const Poly img = substitute(f, {}, big);
    CHECK(img == parse_poly("X0^2 - X1*X2", big));
    // Nontrivial images: X0 -> U, X1 -> W.
    const Poly img2 = substitute(
        f, {{"X0", Poly::variable(big, 3)}, {"X1", Poly::variable(big, 4)}}, big);
    CHECK(img2 == parse_poly("U^2 - W*X2", big));
}

TEST_CASE("exact division by variable powers") {
    const Poly p = P("X0^2*X1 + X0^3");
    CHECK(p.divisible_by_var(0));
    CHECK_FALSE(p.divisible_by_var(1));
    CHECK(p.divide_by_var_power(0, 2) == P("X1 + X0"));
    CHECK_THROWS_AS(P("X0 + X1").divide_by_var_power(0, 1), error);
}

TEST_CASE("ring mismatch is detected") {
    const RingPtr other = p4_ring();
    CHECK_THROWS_AS(P("X0") + parse_poly("X0", other), ring_mismatch);
    CHECK_THROWS_AS(P("X0") * parse_poly("U", other), ring_mismatch);
}

TEST_CASE("monic scaling") {
    CHECK(P("3*X0^2 - 6*X1*X2").monic() == P("X0^2 - 2*X1*X2"));
    CHECK(Poly::zero(R).monic() == Poly::zero(R));
}
